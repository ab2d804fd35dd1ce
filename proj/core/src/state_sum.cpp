#include "vkarrow/state_sum.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdlib>
#include <exception>
#include <map>
#include <thread>
#include <unordered_map>

namespace vkarrow {

namespace {

// Flattened view of a Gauss code for the inner loop. Positions are
// 0..L-1; arc i runs from position i to position i+1 (mod L).
struct Prepared {
  std::uint32_t length = 0;
  std::uint32_t crossings = 0;
  std::vector<std::uint32_t> partner;
  std::vector<std::uint32_t> crossing_of;
  std::vector<std::uint8_t> over;
  std::vector<Sign> sign;                    // per crossing
  std::vector<std::int8_t> sink_sign;        // per position: cusp entering the sink here
  std::vector<std::int8_t> source_sign;      // per position: cusp entering the source here
  std::vector<std::uint8_t> b_is_disoriented;  // per crossing
};

Prepared prepare(const GaussCode& code, const Convention& conv) {
  if (code.crossing_count() > kMaxCrossings) {
    throw std::invalid_argument("too many crossings for state enumeration");
  }
  Prepared d;
  d.length = static_cast<std::uint32_t>(code.length());
  d.crossings = static_cast<std::uint32_t>(code.crossing_count());
  d.partner.resize(d.length);
  d.crossing_of.resize(d.length);
  d.over.resize(d.length);
  d.sink_sign.resize(d.length);
  d.source_sign.resize(d.length);

  std::map<unsigned, std::uint32_t> index;
  for (std::uint32_t i = 0; i < d.length; ++i) {
    const auto& p = code[i];
    auto [it, inserted] = index.try_emplace(p.crossing, static_cast<std::uint32_t>(index.size()));
    if (inserted) d.sign.push_back(p.sign);
    d.crossing_of[i] = it->second;
    d.partner[i] = static_cast<std::uint32_t>(code.partner(i));
    d.over[i] = p.strand == Strand::Over;
    d.sink_sign[i] = static_cast<std::int8_t>(conv.cusp_sign(p.sign, Band::Sink, d.over[i]));
    d.source_sign[i] = static_cast<std::int8_t>(conv.cusp_sign(p.sign, Band::Source, d.over[i]));
  }
  d.b_is_disoriented.resize(d.crossings);
  for (std::uint32_t c = 0; c < d.crossings; ++c) {
    d.b_is_disoriented[c] = conv.oriented_letter(d.sign[c]) == SmoothingLetter::A;
  }
  return d;
}

// Walks every loop of the state `mask`. on_cusp(sign) fires per cusp,
// on_loop() after each closed loop.
template <class OnCusp, class OnLoop>
void walk_state(const Prepared& d, std::uint64_t mask, std::vector<std::uint8_t>& disoriented,
                std::vector<std::uint8_t>& visited, OnCusp&& on_cusp, OnLoop&& on_loop) {
  const std::uint32_t L = d.length;
  for (std::uint32_t c = 0; c < d.crossings; ++c) {
    const bool b = (mask >> c) & 1u;
    disoriented[c] = b == static_cast<bool>(d.b_is_disoriented[c]);
  }
  std::fill(visited.begin(), visited.end(), 0);

  for (std::uint32_t start = 0; start < L; ++start) {
    if (visited[start]) continue;
    std::uint32_t arc = start;
    bool forward = true;
    do {
      visited[arc] = 1;
      const std::uint32_t x = forward ? (arc + 1 == L ? 0 : arc + 1) : arc;
      const std::uint32_t y = d.partner[x];
      const std::uint32_t before_y = y == 0 ? L - 1 : y - 1;
      if (!disoriented[d.crossing_of[x]]) {
        arc = forward ? y : before_y;
      } else if (forward) {
        on_cusp(d.sink_sign[x]);
        arc = before_y;
        forward = false;
      } else {
        on_cusp(d.source_sign[x]);
        arc = y;
        forward = true;
      }
    } while (arc != start);
    assert(forward);
    on_loop();
  }
}

// State signature: [B count][loop count][sorted nonzero loop indices...].
using StateKey = std::string;

ArrowPolynomial collect(const Prepared& d,
                        const std::unordered_map<StateKey, std::int64_t>& tally) {
  // Group by loop count so each d-power is applied once.
  std::map<unsigned, ArrowPolynomial> by_loops;
  for (const auto& [key, count] : tally) {
    const auto b_count = static_cast<unsigned char>(key[0]);
    const auto loops = static_cast<unsigned char>(key[1]);
    const int a_exp = static_cast<int>(d.crossings) - 2 * static_cast<int>(b_count);
    std::vector<ArrowMonomial::KPower> ks;
    for (std::size_t i = 2; i < key.size(); ++i) {
      const auto idx = static_cast<unsigned char>(key[i]);
      if (!ks.empty() && ks.back().first == idx) {
        ++ks.back().second;
      } else {
        ks.emplace_back(idx, 1u);
      }
    }
    by_loops[loops].add_term(ArrowMonomial(a_exp, std::move(ks)), count);
  }
  ArrowPolynomial out;
  for (const auto& [loops, p] : by_loops) out += mul_d_power(p, loops - 1);
  return out;
}

ArrowPolynomial expand_prepared(const Prepared& d, std::uint64_t first, std::uint64_t last,
                                std::uint64_t& visited_states) {
  if (d.length == 0) {
    if (first == 0 && last >= 1) {
      ++visited_states;
      return ArrowPolynomial::one();
    }
    return {};
  }
  std::vector<std::uint8_t> disoriented(d.crossings);
  std::vector<std::uint8_t> visited(d.length);
  std::vector<unsigned char> indices;
  indices.reserve(d.length);
  std::unordered_map<StateKey, std::int64_t> tally;
  StateKey key;

  for (std::uint64_t mask = first; mask < last; ++mask) {
    indices.clear();
    unsigned loops = 0;
    int cusp_sum = 0;
    walk_state(
        d, mask, disoriented, visited, [&](int s) { cusp_sum += s; },
        [&] {
          ++loops;
          if (cusp_sum != 0) indices.push_back(static_cast<unsigned char>(std::abs(cusp_sum) / 2));
          cusp_sum = 0;
        });
    std::sort(indices.begin(), indices.end());
    key.clear();
    key.push_back(static_cast<char>(std::popcount(mask)));
    key.push_back(static_cast<char>(loops));
    for (auto i : indices) key.push_back(static_cast<char>(i));
    ++tally[key];
    ++visited_states;
  }
  return collect(d, tally);
}

std::uint64_t state_count(const Prepared& d) {
  return d.length == 0 ? 1 : (std::uint64_t{1} << d.crossings);
}

}  // namespace

std::vector<Convention> Convention::candidates() {
  std::vector<Convention> out;
  constexpr SmoothingLetter kLetters[] = {SmoothingLetter::A, SmoothingLetter::B};
  for (auto pos : kLetters) {
    for (auto neg : kLetters) {
      for (unsigned bits = 0; bits < 8; ++bits) {
        Convention c;
        c.oriented_at_positive = pos;
        c.oriented_at_negative = neg;
        c.over_entry_sign[0][0] = 1;
        c.over_entry_sign[0][1] = (bits & 1u) ? 1 : -1;
        c.over_entry_sign[1][0] = (bits & 2u) ? 1 : -1;
        c.over_entry_sign[1][1] = (bits & 4u) ? 1 : -1;
        out.push_back(c);
      }
    }
  }
  return out;
}

std::string to_string(const Convention& conv) {
  auto letter = [](SmoothingLetter l) { return l == SmoothingLetter::A ? "A" : "B"; };
  auto sgn = [](int v) { return v > 0 ? "+" : "-"; };
  std::string s = "oriented(+)=";
  s += letter(conv.oriented_at_positive);
  s += " oriented(-)=";
  s += letter(conv.oriented_at_negative);
  s += " cusp(+,sink,over)=";
  s += sgn(conv.over_entry_sign[0][0]);
  s += " cusp(+,source,over)=";
  s += sgn(conv.over_entry_sign[0][1]);
  s += " cusp(-,sink,over)=";
  s += sgn(conv.over_entry_sign[1][0]);
  s += " cusp(-,source,over)=";
  s += sgn(conv.over_entry_sign[1][1]);
  return s;
}

std::vector<StateLoop> trace_state(const GaussCode& code, SmoothingChoice choice,
                                   const Convention& conv) {
  const Prepared d = prepare(code, conv);
  if (d.length == 0) return {StateLoop{}};
  std::vector<std::uint8_t> disoriented(d.crossings);
  std::vector<std::uint8_t> visited(d.length);
  std::vector<StateLoop> loops;
  CuspWord word;
  walk_state(
      d, choice.mask, disoriented, visited,
      [&](int s) { word.push_back(static_cast<std::int8_t>(s)); },
      [&] {
        loops.push_back({std::move(word)});
        word.clear();
      });
  return loops;
}

unsigned reduce_loop(const CuspWord& word) {
  if (word.size() % 2 != 0) throw std::invalid_argument("cusp word has odd length");
  int sum = 0;
  for (auto s : word) sum += s;
  return static_cast<unsigned>(std::abs(sum) / 2);
}

ArrowPolynomial expand_range(const GaussCode& code, std::uint64_t first, std::uint64_t last,
                             const Convention& conv) {
  const Prepared d = prepare(code, conv);
  last = std::min(last, state_count(d));
  if (first >= last) return {};
  std::uint64_t visited = 0;
  return expand_prepared(d, first, last, visited);
}

ArrowPolynomial expand(const GaussCode& code, const ExpandOptions& options, ExpandStats* stats) {
  const Prepared d = prepare(code, options.convention);
  const std::uint64_t total = state_count(d);

  unsigned workers = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  workers = std::max(1u, workers);
  // Small codes are not worth a thread.
  if (d.crossings < 10) workers = 1;
  if (workers > total) workers = static_cast<unsigned>(total);

  std::vector<ArrowPolynomial> partial(workers);
  std::vector<std::uint64_t> visited(workers, 0);
  if (workers == 1) {
    partial[0] = expand_prepared(d, 0, total, visited[0]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      const std::uint64_t chunk = total / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t first = chunk * w;
        const std::uint64_t last = w + 1 == workers ? total : first + chunk;
        pool.emplace_back([&, w, first, last] {
          try {
            partial[w] = expand_prepared(d, first, last, visited[w]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  ArrowPolynomial out;
  for (const auto& p : partial) out += p;
  if (stats) {
    stats->workers = workers;
    stats->states_visited = 0;
    for (auto v : visited) stats->states_visited += v;
  }
  return out;
}

}  // namespace vkarrow
