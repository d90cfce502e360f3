#include "adjq/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "json.hpp"

namespace adjq::rootsys {

namespace {

constexpr int kRankCap = 8;

void check_type(Family family, int rank) {
  int lo = 0, hi = 0;
  switch (family) {
    case Family::A: lo = 1; hi = kRankCap; break;
    case Family::B: lo = 2; hi = kRankCap; break;
    case Family::C: lo = 2; hi = kRankCap; break;
    case Family::D: lo = 3; hi = kRankCap; break;
    case Family::E: lo = 6; hi = 8; break;
    case Family::F: lo = 4; hi = 4; break;
    case Family::G: lo = 2; hi = 2; break;
  }
  if (rank < lo || rank > hi) {
    std::ostringstream os;
    os << "unsupported type " << static_cast<char>(family) << rank << " (valid rank " << lo << ".."
       << hi << ")";
    throw InvalidTypeError(os.str());
  }
}

// Half squared lengths of the simple roots, normalized so long roots have
// squared length 2.
std::vector<Rat> simple_lengths(Family family, int rank) {
  std::vector<Rat> d(static_cast<std::size_t>(rank), Rat(1));
  switch (family) {
    case Family::B: d.back() = Rat(1, 2); break;
    case Family::C:
      for (int i = 0; i < rank - 1; ++i) d[static_cast<std::size_t>(i)] = Rat(1, 2);
      break;
    case Family::F:
      d[2] = Rat(1, 2);
      d[3] = Rat(1, 2);
      break;
    case Family::G: d[0] = Rat(1, 3); break;
    default: break;
  }
  return d;
}

}  // namespace

std::string to_string(const WeightVec& w) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

std::string CartanDatum::label() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanDatum cartan_datum(Family family, int rank) {
  check_type(family, rank);
  std::vector<std::vector<long>> c(static_cast<std::size_t>(rank),
                                        std::vector<long>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  auto bond = [&](int i, int j, long cij = -1, long cji = -1) {
    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cij;
    c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = cji;
  };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1);
      bond(rank - 2, rank - 1, -2, -1);  // alpha_n is the short root
      break;
    case Family::C:
      for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1);
      bond(rank - 2, rank - 1, -1, -2);  // alpha_n is the long root
      break;
    case Family::D:
      for (int i = 0; i + 3 < rank; ++i) bond(i, i + 1);
      bond(rank - 3, rank - 2);
      bond(rank - 3, rank - 1);
      break;
    case Family::E:
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < rank; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(0, 1);
      bond(1, 2, -2, -1);  // alpha_3, alpha_4 short
      bond(2, 3);
      break;
    case Family::G:
      bond(0, 1, -1, -3);  // alpha_1 short
      break;
  }
  return CartanDatum{family, rank, std::move(c)};
}

std::pair<Family, int> parse_type(const std::string& label) {
  if (label.size() < 2) throw InvalidTypeError("bad type label: " + label);
  char f = label[0];
  if (f < 'A' || f > 'G') throw InvalidTypeError("bad family letter in: " + label);
  int rank = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (label[i] < '0' || label[i] > '9') throw InvalidTypeError("bad rank in: " + label);
    rank = rank * 10 + (label[i] - '0');
  }
  check_type(static_cast<Family>(f), rank);
  return {static_cast<Family>(f), rank};
}

long center_order(Family family, int rank) {
  CartanDatum cd = cartan_datum(family, rank);
  intlat::IntMatrix m = intlat::IntMatrix::from_rows(cd.cartan);
  mpz_class d = abs(intlat::det(m));
  return d.get_si();
}

Rat RootSystem::inner(const WeightVec& a, const WeightVec& b) const {
  Rat acc(0);
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b[j] == 0) continue;
      acc += Rat(a[i]) * form.at(i, j) * Rat(b[j]);
    }
  }
  return acc;
}

long RootSystem::pairing(const WeightVec& lambda, const WeightVec& beta) const {
  Rat p = 2 * inner(lambda, beta) / inner(beta, beta);
  if (p.get_den() != 1)
    throw InvariantViolationError("pairing with a non-root direction is not integral");
  return p.get_num().get_si();
}

std::vector<Rat> RootSystem::simple_coords(const WeightVec& w) const {
  std::vector<Rat> y(static_cast<std::size_t>(rank()), Rat(0));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) y[static_cast<std::size_t>(i)] += cartan_t_inv_.at(i, j) * Rat(w[j]);
  return y;
}

long RootSystem::height(const WeightVec& root) const {
  Rat h(0);
  for (const Rat& y : simple_coords(root)) h += y;
  if (h.get_den() != 1) throw InvariantViolationError("height of a non-lattice vector");
  return h.get_num().get_si();
}

RootSystem build_root_system(Family family, int rank) {
  RootSystem rs;
  rs.datum = cartan_datum(family, rank);

  const auto& c = rs.datum.cartan;
  auto reflect = [&](int i, const WeightVec& x) {
    WeightVec r = x;
    long coef = x[i];
    if (coef == 0) return r;
    for (int j = 0; j < rank; ++j) r[j] -= coef * c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return r;
  };

  for (int i = 0; i < rank; ++i)
    rs.simple_roots.push_back(WeightVec(std::vector<long>(c[static_cast<std::size_t>(i)].begin(),
                                                               c[static_cast<std::size_t>(i)].end())));

  // Reflection closure of the simple roots.
  std::deque<WeightVec> todo(rs.simple_roots.begin(), rs.simple_roots.end());
  for (const auto& s : rs.simple_roots) rs.root_set_.insert(s);
  while (!todo.empty()) {
    WeightVec cur = todo.front();
    todo.pop_front();
    for (int i = 0; i < rank; ++i) {
      WeightVec img = reflect(i, cur);
      if (rs.root_set_.insert(img).second) todo.push_back(img);
    }
  }
  rs.roots.assign(rs.root_set_.begin(), rs.root_set_.end());
  std::sort(rs.roots.begin(), rs.roots.end());

  // Invariant form: (w_i, w_j) = d_j * C^{-1}[i][j], long roots squared length 2.
  std::vector<Rat> d = simple_lengths(family, rank);
  RatMat cmat(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cmat.at(i, j) = Rat(c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  RatMat cinv = ratmat::inverse(cmat);
  rs.form = RatMat(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.form.at(i, j) = d[static_cast<std::size_t>(j)] * cinv.at(i, j);
  rs.cartan_t_inv_ = ratmat::inverse(cmat.transpose());

  // Positive roots: positive height. Short roots: minimal squared length.
  Rat min_len;
  bool first = true;
  for (const WeightVec& r : rs.roots) {
    Rat len = rs.inner(r, r);
    if (first || len < min_len) {
      min_len = len;
      first = false;
    }
  }
  for (const WeightVec& r : rs.roots) {
    if (rs.height(r) > 0) rs.positive_roots.push_back(r);
    if (rs.inner(r, r) == min_len) {
      rs.short_roots.push_back(r);
      rs.short_set_.insert(r);
    }
  }

  long best_h = 0, best_short_h = 0;
  for (const WeightVec& r : rs.positive_roots) {
    long h = rs.height(r);
    if (h > best_h) {
      best_h = h;
      rs.highest_root = r;
    }
    if (rs.is_short_root(r) && h > best_short_h) {
      best_short_h = h;
      rs.highest_short_root = r;
    }
  }
  if (!rs.highest_root.is_dominant() || !rs.highest_short_root.is_dominant())
    throw InvariantViolationError("highest roots failed dominance");
  return rs;
}

LatticeFrame lattice_frame(const RootSystem& rs) {
  LatticeFrame f;
  f.ambient = rs.rank();
  f.root_lattice = intlat::IntMatrix::from_rows(rs.datum.cartan);
  f.coroot_lattice = intlat::IntMatrix::identity(rs.rank());
  return f;
}

std::vector<std::array<WeightVec, 3>> zero_sum_triples(const std::vector<WeightVec>& weights) {
  std::vector<WeightVec> w = weights;
  std::sort(w.begin(), w.end());
  WeightSet set(w.begin(), w.end());
  std::vector<std::array<WeightVec, 3>> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      WeightVec third = -(w[i] + w[j]);
      if (third > w[j] && set.count(third)) out.push_back({w[i], w[j], third});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<WeightVec, 4>> proper_zero_sum_quadruples(const std::vector<WeightVec>& weights) {
  std::vector<WeightVec> w = weights;
  std::sort(w.begin(), w.end());
  WeightSet set(w.begin(), w.end());
  std::vector<std::array<WeightVec, 4>> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if ((w[i] + w[j]).is_zero()) continue;
      for (std::size_t k = j + 1; k < w.size(); ++k) {
        if ((w[i] + w[k]).is_zero() || (w[j] + w[k]).is_zero()) continue;
        WeightVec fourth = -(w[i] + w[j] + w[k]);
        if (!(fourth > w[k]) || !set.count(fourth)) continue;
        if ((w[i] + fourth).is_zero() || (w[j] + fourth).is_zero() || (w[k] + fourth).is_zero())
          continue;
        out.push_back({w[i], w[j], w[k], fourth});
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string debug_dump_json(const RootSystem& rs) {
  nlohmann::ordered_json j;
  j["family"] = std::string(1, static_cast<char>(rs.datum.family));
  j["rank"] = rs.rank();
  j["cartan"] = rs.datum.cartan;
  auto coords = [](const std::vector<WeightVec>& v) {
    std::vector<std::vector<long>> out;
    for (const auto& w : v) out.push_back(w.c);
    return out;
  };
  j["roots"] = coords(rs.roots);
  j["positive_roots"] = coords(rs.positive_roots);
  j["short_roots"] = coords(rs.short_roots);
  j["highest_root"] = rs.highest_root.c;
  j["highest_short_root"] = rs.highest_short_root.c;
  j["center_order"] = center_order(rs.datum.family, rs.rank());
  return j.dump(2);
}

}  // namespace adjq::rootsys
