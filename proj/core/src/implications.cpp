#include "infratop/implications.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace infratop {

namespace {

constexpr std::uint32_t kNone = ~std::uint32_t{0};

bool subset_before(std::uint32_t a, std::uint32_t b) {
  const auto pa = std::popcount(a);
  const auto pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

bool space_before(const InfraSpace& a, const InfraSpace& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return compare_encoding(a.opens(), b.opens()) < 0;
}

// Per-space counts and minimal witness subset for every ordered pair.
struct Local {
  std::vector<std::uint64_t> counts;
  std::vector<std::uint32_t> best;
};

Local scan(const InfraSpace& s, const std::vector<ClassId>& classes, DeltaReading reading) {
  const ClassEvaluator eval(s, reading);
  const std::size_t k = classes.size();
  Local out{std::vector<std::uint64_t>(k * k, 0), std::vector<std::uint32_t>(k * k, kNone)};
  std::vector<bool> mem(k);
  const auto count = s.ground().subset_count();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const SubsetMask a(static_cast<std::uint32_t>(bits));
    for (std::size_t i = 0; i < k; ++i) mem[i] = eval.member(classes[i], a);
    for (std::size_t i = 0; i < k; ++i) {
      if (!mem[i]) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (mem[j]) continue;
        const std::size_t cell = i * k + j;
        ++out.counts[cell];
        if (out.best[cell] == kNone || subset_before(a.bits(), out.best[cell])) out.best[cell] = a.bits();
      }
    }
  }
  return out;
}

}  // namespace

std::optional<std::size_t> ImplicationMatrix::index_of(ClassId c) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] == c) return i;
  }
  return std::nullopt;
}

const ImplicationCell& ImplicationMatrix::cell(ClassId from, ClassId to) const {
  const auto i = index_of(from);
  const auto j = index_of(to);
  if (!i || !j) throw std::out_of_range("class not in implication matrix");
  return cells[*i][*j];
}

ImplicationMatrix implication_matrix(std::span<const InfraSpace> spaces, std::vector<ClassId> classes,
                                     DeltaReading reading, unsigned jobs) {
  ImplicationMatrix m;
  m.classes = std::move(classes);
  m.space_count = spaces.size();
  const std::size_t k = m.classes.size();
  m.cells.assign(k, std::vector<ImplicationCell>(k));

  std::vector<Local> locals(spaces.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < spaces.size(); i = next++) locals[i] = scan(spaces[i], m.classes, reading);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(spaces.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t s = 0; s < spaces.size(); ++s) {
    const auto& local = locals[s];
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t idx = i * k + j;
        if (local.counts[idx] == 0) continue;
        auto& c = m.cells[i][j];
        c.holds = false;
        c.counterexamples += local.counts[idx];
        if (!c.witness || space_before(spaces[s], c.witness->space)) {
          c.witness = SpaceWitness{spaces[s], SubsetMask(local.best[idx])};
        }
      }
    }
  }
  return m;
}

std::optional<SpaceWitness> hunt(std::span<const InfraSpace> spaces, ClassId from, ClassId not_to,
                                 DeltaReading reading) {
  if (from == not_to) throw std::invalid_argument("hunt needs two different classes");
  std::optional<SpaceWitness> best;
  for (const auto& s : spaces) {
    if (best && !space_before(s, best->space)) continue;
    const auto all = hunt_all(s, from, not_to, reading);
    if (!all.empty()) best = SpaceWitness{s, all.front()};
  }
  return best;
}

std::vector<SubsetMask> hunt_all(const InfraSpace& s, ClassId from, ClassId not_to, DeltaReading reading) {
  const ClassEvaluator eval(s, reading);
  std::vector<SubsetMask> out;
  const auto count = s.ground().subset_count();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const SubsetMask a(static_cast<std::uint32_t>(bits));
    if (eval.member(from, a) && !eval.member(not_to, a)) out.push_back(a);
  }
  std::stable_sort(out.begin(), out.end(), [](SubsetMask x, SubsetMask y) { return subset_before(x.bits(), y.bits()); });
  return out;
}

std::string to_dot(const ImplicationMatrix& m) {
  std::string out = "digraph implications {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& c : m.classes) out += "  \"" + c.name() + "\";\n";
  const std::size_t k = m.classes.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !m.cells[i][j].holds) continue;
      out += "  \"" + m.classes[i].name() + "\" -> \"" + m.classes[j].name() + "\"";
      const auto& back = m.cells[j][i];
      if (!back.holds && back.witness) {
        const auto& w = *back.witness;
        out += " [label=\"strict: " + w.space.ground().format(w.subset) + " in " +
               format_family(w.space.ground(), w.space.opens()) + "\"]";
      }
      out += ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace infratop
