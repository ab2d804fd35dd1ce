#include "vkarrow/gauss_code.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>

namespace vkarrow {

namespace {

constexpr std::size_t kUnpaired = std::numeric_limits<std::size_t>::max();

std::string label_text(unsigned label) { return std::to_string(label); }

std::string format_passes(std::span<const GaussPass> passes, bool relabel) {
  std::map<unsigned, unsigned> relabeled;
  std::string out;
  out.reserve(passes.size() * 3);
  for (const auto& p : passes) {
    unsigned label = p.crossing;
    if (relabel) {
      auto [it, inserted] = relabeled.try_emplace(
          p.crossing, static_cast<unsigned>(relabeled.size() + 1));
      label = it->second;
    }
    out += p.strand == Strand::Over ? 'O' : 'U';
    out += label_text(label);
    out += p.sign == Sign::Positive ? '+' : '-';
  }
  return out;
}

}  // namespace

GaussCode::GaussCode(std::vector<GaussPass> passes) : passes_(std::move(passes)) {
  struct Seen {
    std::size_t first = kUnpaired;
    std::size_t count = 0;
  };
  std::map<unsigned, Seen> seen;
  for (std::size_t i = 0; i < passes_.size(); ++i) {
    const auto& p = passes_[i];
    if (p.crossing == 0) {
      throw GaussCodeError(GaussErrorKind::MalformedToken,
                           "crossing labels must be positive");
    }
    auto& s = seen[p.crossing];
    if (++s.count == 1) s.first = i;
  }

  partner_.assign(passes_.size(), kUnpaired);
  for (const auto& [label, s] : seen) {
    if (s.count != 2) {
      throw GaussCodeError(GaussErrorKind::WrongPassCount,
                           "crossing " + label_text(label) + " appears " +
                               std::to_string(s.count) + " times");
    }
  }
  for (std::size_t i = 0; i < passes_.size(); ++i) {
    const auto& s = seen[passes_[i].crossing];
    if (s.first == i) continue;
    const auto& a = passes_[s.first];
    const auto& b = passes_[i];
    if (a.strand == b.strand) {
      throw GaussCodeError(GaussErrorKind::RepeatedStrand,
                           "crossing " + label_text(a.crossing) + " passed " +
                               (a.strand == Strand::Over ? "over" : "under") +
                               " twice");
    }
    if (a.sign != b.sign) {
      throw GaussCodeError(GaussErrorKind::InconsistentSign,
                           "crossing " + label_text(a.crossing) +
                               " has inconsistent signs");
    }
    partner_[s.first] = i;
    partner_[i] = s.first;
  }
}

unsigned GaussCode::max_label() const noexcept {
  unsigned m = 0;
  for (const auto& p : passes_) m = std::max(m, p.crossing);
  return m;
}

GaussCode parse_gauss(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return GaussCode{};
  text = text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1);

  if (text.find_first_of(",|;") != std::string_view::npos) {
    throw GaussCodeError(GaussErrorKind::MultiComponent,
                         "multi-component Gauss codes are not supported");
  }

  std::vector<GaussPass> passes;
  std::size_t i = 0;
  auto malformed = [&](const std::string& why) {
    return GaussCodeError(GaussErrorKind::MalformedToken,
                          "malformed token at offset " + std::to_string(i) +
                              ": " + why);
  };
  while (i < text.size()) {
    if (!passes.empty() && text[i] == ' ') {
      ++i;
      if (i >= text.size() || text[i] == ' ') throw malformed("bad spacing");
    }
    GaussPass pass;
    switch (text[i]) {
      case 'O': pass.strand = Strand::Over; break;
      case 'U': pass.strand = Strand::Under; break;
      default: throw malformed("expected 'O' or 'U'");
    }
    ++i;
    const char* begin = text.data() + i;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, pass.crossing);
    if (ec != std::errc{} || ptr == begin) throw malformed("expected crossing label");
    if (*begin == '0') throw malformed("label must be >= 1 without leading zeros");
    i += static_cast<std::size_t>(ptr - begin);
    if (i >= text.size()) throw malformed("missing sign");
    switch (text[i]) {
      case '+': pass.sign = Sign::Positive; break;
      case '-': pass.sign = Sign::Negative; break;
      default: throw malformed("expected '+' or '-'");
    }
    ++i;
    passes.push_back(pass);
  }
  return GaussCode(std::move(passes));
}

std::string to_string(const GaussCode& code) {
  return format_passes(code.passes(), false);
}

std::string canonical_string(const GaussCode& code) {
  return format_passes(code.passes(), true);
}

int writhe(const GaussCode& code) {
  int w = 0;
  for (const auto& p : code.passes()) {
    if (p.strand == Strand::Over) w += to_int(p.sign);
  }
  return w;
}

GaussCode mirror(const GaussCode& code) {
  std::vector<GaussPass> out(code.passes().begin(), code.passes().end());
  for (auto& p : out) {
    p.strand = opposite(p.strand);
    p.sign = -p.sign;
  }
  return GaussCode(std::move(out));
}

GaussCode reverse(const GaussCode& code) {
  std::vector<GaussPass> out(code.passes().rbegin(), code.passes().rend());
  return GaussCode(std::move(out));
}

GaussCode rotate(const GaussCode& code, std::size_t shift) {
  std::vector<GaussPass> out(code.passes().begin(), code.passes().end());
  if (!out.empty()) {
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()),
                out.end());
  }
  return GaussCode(std::move(out));
}

GaussCode insert_r1(const GaussCode& code, std::size_t position, Sign kink_sign,
                    KinkChirality chirality) {
  if (position > code.length()) throw std::out_of_range("insert_r1: position");
  const unsigned label = code.max_label() + 1;
  const Strand first =
      chirality == KinkChirality::OverFirst ? Strand::Over : Strand::Under;
  std::vector<GaussPass> out(code.passes().begin(), code.passes().end());
  const auto at = out.begin() + static_cast<std::ptrdiff_t>(position);
  out.insert(at, {GaussPass{label, first, kink_sign},
                  GaussPass{label, opposite(first), kink_sign}});
  return GaussCode(std::move(out));
}

GaussCode insert_r2(const GaussCode& code, std::size_t pos_a, std::size_t pos_b,
                    R2Variant variant, Sign first_sign) {
  if (pos_a > pos_b || pos_b > code.length()) {
    throw std::out_of_range("insert_r2: need pos_a <= pos_b <= length");
  }
  const unsigned i = code.max_label() + 1;
  const unsigned j = i + 1;
  const Strand lead = variant == R2Variant::OverFirst ? Strand::Over : Strand::Under;
  const Strand trail = opposite(lead);

  std::vector<GaussPass> out;
  out.reserve(code.length() + 4);
  auto src = code.passes();
  out.insert(out.end(), src.begin(), src.begin() + static_cast<std::ptrdiff_t>(pos_a));
  out.push_back({i, lead, first_sign});
  out.push_back({j, lead, -first_sign});
  out.insert(out.end(), src.begin() + static_cast<std::ptrdiff_t>(pos_a),
             src.begin() + static_cast<std::ptrdiff_t>(pos_b));
  out.push_back({j, trail, -first_sign});
  out.push_back({i, trail, first_sign});
  out.insert(out.end(), src.begin() + static_cast<std::ptrdiff_t>(pos_b), src.end());
  return GaussCode(std::move(out));
}

std::vector<MovePair> r3_fixture_pairs() {
  // Closures of braid words w = L.s and w' = R.s where L = R is a braid
  // relation; "v" is a virtual generator (no Gauss-code entry).
  static constexpr std::pair<std::string_view, std::string_view> kPairs[] = {
      // s1 s2 s1 s1  |  s2 s1 s2 s1
      {"O1+O2+U2+U3+O4+U1+O3+U4+", "O2+O3+U1+U2+O4+O1+U3+U4+"},
      // s1' s2' s1' s2  |  s2' s1' s2' s2
      {"U1-U2-U4+O1-U3-O4+O2-O3-", "U2-U3-U4+U1-O3-O4+O1-O2-"},
      // s1 s2 s1' s2  |  s2' s1 s2 s2
      {"O1+O2+U4+U1+U3-O4+U2+O3-", "O2+O3+U4+U1-U3+O4+O1-U2+"},
      // s1 s2 s1 v1  |  s2 s1 s2 v1
      {"O1+O2+U2+U3+U1+O3+", "O2+O3+U1+U2+O1+U3+"},
      // s1' s2' s1' v1  |  s2' s1' s2' v1
      {"U1-U2-O2-O3-O1-U3-", "U2-U3-O1-O2-U1-O3-"},
      // s1 s2 s1' s1 s1 v1  |  s2' s1 s2 s1 s1 v1
      {"O1+O2+U2+O3-O4+U5+U1+U3-U4+O5+", "O2+O3+O1-U2+O4+U5+U1-U3+U4+O5+"},
      // s1' s2 s1 s1 s1 v1  |  s2 s1 s2' s1 s1 v1
      {"U1-O2+U2+U3+O4+U5+O1-O3+U4+O5+", "O2+U3-U1+U2+O4+U5+O1+O3-U4+O5+"},
      // s2 s3 s2 s1 v2  |  s3 s2 s3 s1 v2
      {"O4+U1+O3+O1+O2+U2+U3+U4+", "O4+O1+U3+O2+O3+U1+U2+U4+"},
  };
  std::vector<MovePair> out;
  out.reserve(std::size(kPairs));
  for (const auto& [before, after] : kPairs) {
    out.push_back({parse_gauss(before), parse_gauss(after), MoveKind::R3});
  }
  return out;
}

}  // namespace vkarrow
