#include <adjq/weyl.hpp>

#include <adjq/ratmat.hpp>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

namespace adjq::weyl {

namespace {

std::size_t idx2(int i, int j, int rank) {
  return static_cast<std::size_t>(i) * rank + j;
}

}  // namespace

WeylElement WeylElement::identity_element(int rank) {
  WeylElement e;
  e.rank = rank;
  e.mat.assign(static_cast<std::size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i) e.mat[idx2(i, i, rank)] = 1;
  return e;
}

WeightVec WeylElement::apply(const WeightVec& x) const {
  if (x.rank() != rank) throw RankMismatchError("weyl element applied to wrong rank");
  WeightVec out = WeightVec::zero(rank);
  for (int i = 0; i < rank; ++i) {
    long acc = 0;
    for (int j = 0; j < rank; ++j) acc += mat[idx2(i, j, rank)] * x[j];
    out.c[i] = acc;
  }
  return out;
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (mat[idx2(i, j, rank)] != (i == j ? 1 : 0)) return false;
  return true;
}

WeylElement reflection_in_root(const RootSystem& rs, const WeightVec& beta) {
  const int r = rs.rank();
  WeylElement e = WeylElement::identity_element(r);
  for (int k = 0; k < r; ++k) {
    long ck = rs.pairing(WeightVec::fundamental(r, k), beta);
    if (ck == 0) continue;
    for (int i = 0; i < r; ++i) e.mat[idx2(i, k, r)] -= beta[i] * ck;
  }
  return e;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  WeylElement e = reflection_in_root(rs, rs.simple_roots.at(i));
  e.word = {i};
  return e;
}

std::vector<WeylElement> simple_reflections(const RootSystem& rs) {
  std::vector<WeylElement> gens;
  gens.reserve(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(simple_reflection(rs, i));
  return gens;
}

WeylElement rotation_for_triple(const RootSystem& rs, const WeightVec& a, const WeightVec& b) {
  return compose(reflection_in_root(rs, a), reflection_in_root(rs, b));
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  if (a.rank != b.rank) throw RankMismatchError("composing weyl elements of different rank");
  const int r = a.rank;
  WeylElement e;
  e.rank = r;
  e.mat.assign(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      long aik = a.mat[idx2(i, k, r)];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j) e.mat[idx2(i, j, r)] += aik * b.mat[idx2(k, j, r)];
    }
  e.word = a.word;
  e.word.insert(e.word.end(), b.word.begin(), b.word.end());
  return e;
}

WeylElement inverse(const WeylElement& w) {
  const int r = w.rank;
  ratmat::RatMat m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m.at(i, j) = ratmat::Rat(w.mat[idx2(i, j, r)]);
  ratmat::RatMat mi = ratmat::inverse(m);
  WeylElement e;
  e.rank = r;
  e.mat.assign(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const ratmat::Rat& v = mi.at(i, j);
      if (v.get_den() != 1) throw InvariantViolationError("weyl element inverse not integral");
      e.mat[idx2(i, j, r)] = v.get_num().get_si();
    }
  // Valid provenance when the word is a product of involutions, which
  // covers every word this module produces.
  e.word.assign(w.word.rbegin(), w.word.rend());
  return e;
}

WeylElement element_from_word(const std::vector<WeylElement>& gens,
                              const std::vector<int>& word, int rank) {
  WeylElement e = WeylElement::identity_element(rank);
  for (int g : word) e = compose(e, gens.at(g));
  return e;
}

int element_order(const WeylElement& w, int cap) {
  WeylElement acc = w;
  for (int n = 1; n <= cap; ++n) {
    if (acc.is_identity()) return n;
    acc = compose(acc, w);
  }
  throw InvariantViolationError("element order exceeds cap " + std::to_string(cap));
}

std::size_t effective_orbit_cap(std::size_t requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("ADJQ_ORBIT_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 10'000'000;
}

std::vector<long> canonical_state(const std::vector<WeightVec>& tuple, int sorted_from) {
  if (tuple.empty()) throw UsageError("empty tuple has no orbit state");
  const int r = tuple.front().rank();
  std::vector<std::vector<long>> blocks;
  blocks.reserve(tuple.size());
  for (const auto& w : tuple) {
    if (w.rank() != r) throw RankMismatchError("mixed ranks in orbit tuple");
    blocks.push_back(w.c);
  }
  if (sorted_from < static_cast<int>(blocks.size()))
    std::sort(blocks.begin() + std::max(sorted_from, 0), blocks.end());
  std::vector<long> flat;
  flat.reserve(tuple.size() * static_cast<std::size_t>(r));
  for (const auto& b : blocks) flat.insert(flat.end(), b.begin(), b.end());
  return flat;
}

namespace {

std::vector<long> apply_to_state(const WeylElement& g, const std::vector<long>& state,
                                 int rank, int block, int sorted_from) {
  std::vector<long> out(state.size(), 0);
  for (int b = 0; b < block; ++b) {
    const std::size_t off = static_cast<std::size_t>(b) * rank;
    for (int i = 0; i < rank; ++i) {
      long acc = 0;
      for (int j = 0; j < rank; ++j) acc += g.mat[idx2(i, j, rank)] * state[off + j];
      out[off + i] = acc;
    }
  }
  if (sorted_from < block) {
    std::vector<std::vector<long>> blocks(block);
    for (int b = 0; b < block; ++b)
      blocks[b].assign(out.begin() + b * rank, out.begin() + (b + 1) * rank);
    std::sort(blocks.begin() + std::max(sorted_from, 0), blocks.end());
    std::size_t pos = 0;
    for (const auto& blk : blocks)
      for (long v : blk) out[pos++] = v;
  }
  return out;
}

}  // namespace

std::optional<int> OrbitResult::find(const std::vector<WeightVec>& tuple) const {
  auto it = index.find(canonical_state(tuple, sorted_from));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<int> OrbitResult::witness_word(int state_idx) const {
  std::vector<int> word;
  int cur = state_idx;
  while (cur > 0) {
    word.push_back(parent[cur].second);
    cur = parent[cur].first;
  }
  return word;
}

std::vector<WeightVec> OrbitResult::tuple_at(int state_idx) const {
  const auto& s = states.at(state_idx);
  std::vector<WeightVec> tuple;
  tuple.reserve(block);
  for (int b = 0; b < block; ++b) {
    WeightVec w = WeightVec::zero(rank);
    for (int i = 0; i < rank; ++i) w.c[i] = s[static_cast<std::size_t>(b) * rank + i];
    tuple.push_back(w);
  }
  return tuple;
}

OrbitResult orbit(const std::vector<WeylElement>& gens, const std::vector<WeightVec>& start,
                  int sorted_from, std::size_t cap) {
  cap = effective_orbit_cap(cap);
  OrbitResult res;
  res.rank = start.front().rank();
  res.block = static_cast<int>(start.size());
  res.sorted_from = sorted_from;
  res.states.push_back(canonical_state(start, sorted_from));
  res.parent.emplace_back(-1, -1);
  res.index.emplace(res.states[0], 0);
  for (std::size_t i = 0; i < res.states.size(); ++i) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      std::vector<long> next =
          apply_to_state(gens[gi], res.states[i], res.rank, res.block, sorted_from);
      if (res.index.count(next)) continue;
      if (res.states.size() >= cap)
        throw CapExceededError("orbit exceeds cap " + std::to_string(cap));
      res.index.emplace(next, static_cast<int>(res.states.size()));
      res.states.push_back(std::move(next));
      res.parent.emplace_back(static_cast<int>(i), static_cast<int>(gi));
    }
  }
  return res;
}

OrbitResult weight_orbit(const std::vector<WeylElement>& gens, const WeightVec& start,
                         std::size_t cap) {
  return orbit(gens, {start}, kOrderedTuple, cap);
}

std::optional<WeylElement> transporter(const std::vector<WeylElement>& gens,
                                       const std::vector<WeightVec>& from,
                                       const std::vector<WeightVec>& to,
                                       int sorted_from, std::size_t cap) {
  OrbitResult res = orbit(gens, from, sorted_from, cap);
  auto pos = res.find(to);
  if (!pos) return std::nullopt;
  return element_from_word(gens, res.witness_word(*pos), res.rank);
}

TransitivityReport check_transitivity(const std::vector<WeylElement>& gens,
                                      const std::vector<std::vector<WeightVec>>& family,
                                      int sorted_from, std::size_t cap) {
  TransitivityReport rep;
  if (family.empty()) {
    rep.transitive = true;
    rep.vacuous = true;
    return rep;
  }
  std::unordered_map<std::vector<long>, int, StateHash> members;
  for (const auto& tuple : family) members.emplace(canonical_state(tuple, sorted_from), 1);
  rep.family_size = members.size();
  OrbitResult res = orbit(gens, family.front(), sorted_from, cap);
  rep.orbit_size = res.size();
  if (rep.orbit_size != rep.family_size) return rep;
  for (const auto& s : res.states)
    if (!members.count(s)) return rep;
  rep.transitive = true;
  return rep;
}

StabilizerData stabilizer_of_weight(const RootSystem& rs, const WeightVec& lambda) {
  StabilizerData data;
  WeightVec two_rho0 = WeightVec::zero(rs.rank());
  for (const auto& beta : rs.roots) {
    if (rs.pairing(lambda, beta) != 0) continue;
    data.annihilated_roots.push_back(beta);
    if (rs.height(beta) > 0) {
      data.generators.push_back(reflection_in_root(rs, beta));
      two_rho0 = two_rho0 + beta;
    }
  }
  if (data.generators.empty()) {
    data.order = 1;
    return data;
  }
  OrbitResult res = weight_orbit(data.generators, two_rho0);
  data.order = static_cast<long>(res.size());
  return data;
}

std::vector<int> weyl_degrees(rootsys::Family family, int rank) {
  std::vector<int> d;
  switch (family) {
    case rootsys::Family::A:
      for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
      break;
    case rootsys::Family::B:
    case rootsys::Family::C:
      for (int i = 2; i <= 2 * rank; i += 2) d.push_back(i);
      break;
    case rootsys::Family::D:
      for (int i = 2; i <= 2 * rank - 2; i += 2) d.push_back(i);
      d.push_back(rank);
      break;
    case rootsys::Family::E:
      if (rank == 6) d = {2, 5, 6, 8, 9, 12};
      if (rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (rank == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case rootsys::Family::F:
      d = {2, 6, 8, 12};
      break;
    case rootsys::Family::G:
      d = {2, 6};
      break;
  }
  if (static_cast<int>(d.size()) != rank)
    throw InvalidTypeError("no degree table for this type");
  std::sort(d.begin(), d.end());
  return d;
}

long weyl_order(rootsys::Family family, int rank) {
  long order = 1;
  for (int d : weyl_degrees(family, rank)) order *= d;
  return order;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Open addressing set of packed weight vectors. The sentinel is eight
// bytes of 0x7f, unreachable because orbit coordinates stay far below
// 127 in absolute value.
class PackedSet {
 public:
  static constexpr std::uint64_t kEmpty = 0x7f7f7f7f7f7f7f7full;

  PackedSet() : slots_(1u << 20, kEmpty) {}

  std::size_t count() const { return count_; }

  bool insert(std::uint64_t key) {
    if (10 * (count_ + 1) >= 7 * slots_.size()) grow();
    std::size_t mask = slots_.size() - 1;
    std::size_t pos = splitmix64(key) & mask;
    while (slots_[pos] != kEmpty) {
      if (slots_[pos] == key) return false;
      pos = (pos + 1) & mask;
    }
    slots_[pos] = key;
    ++count_;
    return true;
  }

 private:
  void grow() {
    std::vector<std::uint64_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    std::size_t mask = slots_.size() - 1;
    for (std::uint64_t key : old) {
      if (key == kEmpty) continue;
      std::size_t pos = splitmix64(key) & mask;
      while (slots_[pos] != kEmpty) pos = (pos + 1) & mask;
      slots_[pos] = key;
    }
  }

  std::vector<std::uint64_t> slots_;
  std::size_t count_ = 0;
};

}  // namespace

long weyl_order_by_orbit(const RootSystem& rs, std::size_t cap) {
  cap = effective_orbit_cap(cap);
  const int r = rs.rank();
  std::int8_t cart[8][8] = {};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cart[i][j] = static_cast<std::int8_t>(rs.datum.cartan[i][j]);

  auto pack = [](const std::int8_t* v) {
    std::uint64_t key = 0;
    std::memcpy(&key, v, 8);
    return key;
  };

  std::int8_t start[8] = {};
  for (int i = 0; i < r; ++i) start[i] = 1;

  PackedSet seen;
  std::vector<std::uint64_t> frontier{pack(start)};
  seen.insert(frontier[0]);
  std::vector<std::uint64_t> next_frontier;
  while (!frontier.empty()) {
    next_frontier.clear();
    for (std::uint64_t key : frontier) {
      std::int8_t v[8];
      std::memcpy(v, &key, 8);
      for (int i = 0; i < r; ++i) {
        const std::int8_t xi = v[i];
        if (xi == 0) continue;
        std::int8_t w[8];
        std::memcpy(w, v, 8);
        for (int j = 0; j < r; ++j) {
          int val = w[j] - xi * cart[i][j];
          if (val > 120 || val < -120)
            throw InvariantViolationError("packed orbit coordinate overflow");
          w[j] = static_cast<std::int8_t>(val);
        }
        std::uint64_t nk = pack(w);
        if (seen.insert(nk)) {
          if (seen.count() > cap)
            throw CapExceededError("orbit exceeds cap " + std::to_string(cap));
          next_frontier.push_back(nk);
        }
      }
    }
    frontier.swap(next_frontier);
  }
  return static_cast<long>(seen.count());
}

}  // namespace adjq::weyl
