#include "infratop/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace infratop {

namespace {

unsigned width_of(unsigned n) { return 1u << n; }  // number of subsets, bits in a code

std::uint32_t full_mask(unsigned n) { return low_bits(n); }

unsigned middle_count(unsigned n) { return width_of(n) - 2; }

std::uint32_t reverse_bits(std::uint32_t x) {
  x = ((x >> 1) & 0x55555555u) | ((x & 0x55555555u) << 1);
  x = ((x >> 2) & 0x33333333u) | ((x & 0x33333333u) << 2);
  x = ((x >> 4) & 0x0F0F0F0Fu) | ((x & 0x0F0F0F0Fu) << 4);
  x = ((x >> 8) & 0x00FF00FFu) | ((x & 0x00FF00FFu) << 8);
  return (x >> 16) | (x << 16);
}

// Ordering key on codes of equal cardinality: a larger key means a
// lexicographically smaller sorted member list (the smallest subset in the
// symmetric difference belongs to the family with the larger key).
std::uint32_t lex_key(FamilyCode code, unsigned n) { return reverse_bits(code) >> (32 - width_of(n)); }

using SubsetMap = std::array<std::uint8_t, 32>;

// For every permutation of n elements, the induced map on subset bit patterns.
const std::vector<SubsetMap>& subset_maps(unsigned n) {
  static const auto tables = [] {
    std::array<std::vector<SubsetMap>, kMaxEnumGroundSize + 1> out;
    for (unsigned k = 1; k <= kMaxEnumGroundSize; ++k) {
      std::vector<unsigned> perm(k);
      std::iota(perm.begin(), perm.end(), 0u);
      do {
        SubsetMap map{};
        for (std::uint32_t s = 0; s < width_of(k); ++s) {
          map[s] = static_cast<std::uint8_t>(permute(SubsetMask(s), perm).bits());
        }
        out[k].push_back(map);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
  }();
  return tables.at(n);
}

FamilyCode apply(const SubsetMap& map, FamilyCode code) {
  FamilyCode out = 0;
  for (FamilyCode rest = code; rest != 0; rest &= rest - 1) {
    out |= FamilyCode{1} << map[static_cast<unsigned>(std::countr_zero(rest))];
  }
  return out;
}

void check_n(unsigned n) {
  if (n < 1 || n > kMaxEnumGroundSize) {
    throw std::invalid_argument("enumeration needs 1 <= n <= " + std::to_string(kMaxEnumGroundSize));
  }
}

// Backtracking over the middle subsets X-1 down to 1. Excluding comes before
// including, so leaves appear in ascending code order. Including m forces the
// meets of m with every member already included; those meets are numerically
// below m and so still undecided, hence every branch ends in a valid family.
template <class Visit>
class Walker {
 public:
  Walker(unsigned n, unsigned prefix_len, std::uint32_t prefix, Visit& visit)
      : top_(full_mask(n)), prefix_len_(prefix_len), prefix_(prefix), visit_(visit) {}

  void run() {
    const FamilyCode start = FamilyCode{1} | (FamilyCode{1} << top_);
    if (top_ == 1) {
      visit_(start);
      return;
    }
    step(top_ - 1, start, 0);
  }

 private:
  void step(std::uint32_t m, FamilyCode code, FamilyCode required) {
    if (m == 0) {
      visit_(code);
      return;
    }
    const FamilyCode bit = FamilyCode{1} << m;
    const bool must = (required & bit) != 0;
    const unsigned depth = top_ - 1 - m;
    int forced = -1;  // -1 free, 0 exclude, 1 include
    if (depth < prefix_len_) forced = static_cast<int>((prefix_ >> (prefix_len_ - 1 - depth)) & 1u);

    if (!must && forced != 1) step(m - 1, code, required);
    if (forced == 0 && must) return;
    if (forced != 0) {
      FamilyCode req = required;
      for (FamilyCode rest = code; rest != 0; rest &= rest - 1) {
        req |= FamilyCode{1} << (m & static_cast<std::uint32_t>(std::countr_zero(rest)));
      }
      step(m - 1, code | bit, req);
    }
  }

  std::uint32_t top_;
  unsigned prefix_len_;
  std::uint32_t prefix_;
  Visit& visit_;
};

template <class Visit>
void walk(unsigned n, unsigned prefix_len, std::uint32_t prefix, Visit& visit) {
  Walker<Visit>(n, prefix_len, prefix, visit).run();
}

struct Task {
  unsigned len;
  std::uint32_t prefix;
};

// Prefixes of the decision tree owned by the shard, each optionally split
// into 2^extra sub-prefixes. Order of the list is ascending code order.
std::vector<Task> shard_tasks(const EnumConfig& cfg, unsigned extra) {
  const unsigned middles = middle_count(cfg.n);
  const unsigned k = std::min<unsigned>(std::bit_width(cfg.shard.total - 1u), middles);
  const unsigned j = std::min(extra, middles - k);
  std::vector<Task> out;
  for (std::uint32_t p = 0; p < (std::uint32_t{1} << k); ++p) {
    if (p % cfg.shard.total != cfg.shard.index) continue;
    for (std::uint32_t q = 0; q < (std::uint32_t{1} << j); ++q) out.push_back({k + j, (p << j) | q});
  }
  return out;
}

unsigned split_bits(unsigned jobs) {
  if (jobs <= 1) return 0;
  return static_cast<unsigned>(std::bit_width(std::bit_ceil(4u * jobs) - 1u));
}

template <class PerTask>
void run_tasks(std::size_t count, unsigned jobs, PerTask per_task) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) per_task(i);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace

void EnumConfig::validate() const {
  check_n(n);
  if (shard.total == 0 || shard.index >= shard.total) {
    throw std::invalid_argument("shard index must satisfy 0 <= index < total");
  }
}

FamilyCode code_of(const SetFamily& f) {
  FamilyCode out = 0;
  for (auto s : f) {
    if (s.bits() >= 32) throw std::invalid_argument("family code needs subsets of at most 5 elements");
    out |= FamilyCode{1} << s.bits();
  }
  return out;
}

SetFamily family_of_code(FamilyCode code) {
  std::vector<SubsetMask> members;
  for (FamilyCode rest = code; rest != 0; rest &= rest - 1) {
    members.emplace_back(static_cast<std::uint32_t>(std::countr_zero(rest)));
  }
  return SetFamily(std::move(members));
}

bool is_infra_code(FamilyCode code, unsigned n) {
  check_n(n);
  const std::uint32_t top = full_mask(n);
  if (n < kMaxEnumGroundSize && (code >> width_of(n)) != 0) return false;
  if ((code & 1u) == 0 || ((code >> top) & 1u) == 0) return false;
  for (FamilyCode a = code; a != 0; a &= a - 1) {
    const auto s = static_cast<std::uint32_t>(std::countr_zero(a));
    for (FamilyCode b = a & (a - 1); b != 0; b &= b - 1) {
      const auto t = static_cast<std::uint32_t>(std::countr_zero(b));
      if (((code >> (s & t)) & 1u) == 0) return false;
    }
  }
  return true;
}

FamilyCode canonical_code(FamilyCode code, unsigned n) {
  check_n(n);
  FamilyCode best = code;
  std::uint32_t best_key = lex_key(code, n);
  for (const auto& map : subset_maps(n)) {
    const FamilyCode image = apply(map, code);
    const std::uint32_t key = lex_key(image, n);
    if (key > best_key) {
      best = image;
      best_key = key;
    }
  }
  return best;
}

std::uint64_t orbit_size(FamilyCode code, unsigned n) {
  check_n(n);
  std::vector<FamilyCode> images;
  for (const auto& map : subset_maps(n)) images.push_back(apply(map, code));
  std::sort(images.begin(), images.end());
  return static_cast<std::uint64_t>(std::unique(images.begin(), images.end()) - images.begin());
}

void for_each_code(const EnumConfig& cfg, const std::function<void(FamilyCode)>& visit) {
  cfg.validate();
  auto leaf = [&](FamilyCode code) {
    if (!cfg.up_to_iso || canonical_code(code, cfg.n) == code) visit(code);
  };
  for (const auto& t : shard_tasks(cfg, 0)) walk(cfg.n, t.len, t.prefix, leaf);
}

std::uint64_t count_spaces(const EnumConfig& cfg, unsigned jobs) {
  cfg.validate();
  const auto tasks = shard_tasks(cfg, split_bits(jobs));
  std::vector<std::uint64_t> counts(tasks.size(), 0);
  run_tasks(tasks.size(), jobs, [&](std::size_t i) {
    std::uint64_t c = 0;
    auto leaf = [&](FamilyCode code) {
      if (!cfg.up_to_iso || canonical_code(code, cfg.n) == code) ++c;
    };
    walk(cfg.n, tasks[i].len, tasks[i].prefix, leaf);
    counts[i] = c;
  });
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::vector<FamilyCode> collect_codes(const EnumConfig& cfg, unsigned jobs) {
  cfg.validate();
  const auto tasks = shard_tasks(cfg, split_bits(jobs));
  std::vector<std::vector<FamilyCode>> parts(tasks.size());
  run_tasks(tasks.size(), jobs, [&](std::size_t i) {
    auto leaf = [&](FamilyCode code) {
      if (!cfg.up_to_iso || canonical_code(code, cfg.n) == code) parts[i].push_back(code);
    };
    walk(cfg.n, tasks[i].len, tasks[i].prefix, leaf);
  });
  std::vector<FamilyCode> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

InfraSpace space_of_code(FamilyCode code, unsigned n) {
  check_n(n);
  return InfraSpace::make(GroundSet::letters(n), family_of_code(code));
}

std::vector<InfraSpace> enumerate_spaces(const EnumConfig& cfg, unsigned jobs) {
  std::vector<InfraSpace> out;
  for (auto code : collect_codes(cfg, jobs)) out.push_back(space_of_code(code, cfg.n));
  return out;
}

std::vector<InfraSpace> enumerate_up_to(unsigned max_n, unsigned jobs) {
  check_n(max_n);
  std::vector<InfraSpace> out;
  for (unsigned n = 1; n <= max_n; ++n) {
    EnumConfig cfg;
    cfg.n = n;
    auto part = enumerate_spaces(cfg, jobs);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace infratop
