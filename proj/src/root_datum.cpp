#include "eqk/root_datum.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "eqk/errors.hpp"
#include "eqk/linalg.hpp"

namespace eqk {

WeylElement WeylElement::identity(std::size_t rank) {
  return {IntMatrix::identity(rank), IntMatrix::identity(rank)};
}

namespace {

std::optional<std::size_t> index_of(const std::vector<Weight>& xs, const Weight& x) {
  auto it = std::find(xs.begin(), xs.end(), x);
  if (it == xs.end()) return std::nullopt;
  return static_cast<std::size_t>(it - xs.begin());
}

Weight reflect(const Weight& lambda, const Weight& alpha, const Weight& coalpha) {
  Weight out = lambda;
  long p = pairing(lambda, coalpha);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= static_cast<int>(p * alpha[i]);
  return out;
}

// Coefficients of each root on the simple roots, if all are rational.
std::vector<std::optional<std::vector<Rational>>> simple_expansions(
    const std::vector<Weight>& roots, const std::vector<std::size_t>& simple) {
  std::vector<std::vector<Rational>> cols;
  for (std::size_t s : simple) {
    std::vector<Rational> c;
    for (int v : roots[s]) c.emplace_back(v);
    cols.push_back(c);
  }
  std::vector<std::optional<std::vector<Rational>>> out;
  for (const auto& r : roots) {
    std::vector<Rational> rhs;
    for (int v : r) rhs.emplace_back(v);
    out.push_back(solve_rational(cols, rhs));
  }
  return out;
}

bool torsion_free_quotient(std::size_t rank, const std::vector<Weight>& lattice_gens) {
  if (lattice_gens.empty()) return true;
  IntMatrix m(rank, lattice_gens.size());
  for (std::size_t j = 0; j < lattice_gens.size(); ++j)
    for (std::size_t i = 0; i < rank; ++i) m(i, j) = lattice_gens[j][i];
  for (long d : smith_invariants(m))
    if (d != 1) return false;
  return true;
}

}  // namespace

std::vector<std::string> RootDatum::check_axioms(std::size_t rank, const std::vector<Weight>& roots,
                                                 const std::vector<Weight>& coroots,
                                                 const std::vector<std::size_t>& simple) {
  std::vector<std::string> bad;
  if (rank == 0 || rank > kMaxRank) bad.push_back("rank must be between 1 and 8");
  if (roots.size() != coroots.size()) {
    bad.push_back("roots and coroots must have equal length");
    return bad;
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].size() != rank || coroots[i].size() != rank)
      bad.push_back("root/coroot " + std::to_string(i) + " has wrong length");
  if (!bad.empty()) return bad;

  for (std::size_t i = 0; i < roots.size(); ++i) {
    const std::string tag = "root " + std::to_string(i) + " " + roots[i].str();
    if (roots[i].is_zero()) bad.push_back(tag + ": zero root");
    if (pairing(roots[i], coroots[i]) != 2)
      bad.push_back(tag + ": pairing <alpha, alpha^vee> = " +
                    std::to_string(pairing(roots[i], coroots[i])) + ", expected 2");
    if (std::count(roots.begin(), roots.end(), roots[i]) > 1) bad.push_back(tag + ": duplicate root");
    auto neg = index_of(roots, -roots[i]);
    if (!neg)
      bad.push_back(tag + ": negative is not a root");
    else if (coroots[*neg] != -coroots[i])
      bad.push_back(tag + ": coroot of the negative root is not the negated coroot");
    if (index_of(roots, 2 * roots[i])) bad.push_back(tag + ": non-reduced (twice the root is a root)");
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) {
      Weight img = reflect(roots[j], roots[i], coroots[i]);
      auto k = index_of(roots, img);
      if (!k) {
        bad.push_back("reflection closure: s_" + roots[i].str() + "(" + roots[j].str() +
                      ") = " + img.str() + " is not a root");
        continue;
      }
      Weight coimg = reflect(coroots[j], coroots[i], roots[i]);
      if (coroots[*k] != coimg)
        bad.push_back("coroot compatibility: reflection of coroot " + coroots[j].str() +
                      " does not match coroot of " + img.str());
    }

  std::set<std::size_t> seen;
  for (std::size_t s : simple) {
    if (s >= roots.size()) {
      bad.push_back("simple index " + std::to_string(s) + " out of range");
      return bad;
    }
    if (!seen.insert(s).second) bad.push_back("simple index " + std::to_string(s) + " repeated");
  }
  if (!simple.empty()) {
    std::vector<std::vector<Rational>> cols;
    for (std::size_t s : simple) {
      std::vector<Rational> c;
      for (int v : roots[s]) c.emplace_back(v);
      cols.push_back(c);
    }
    for (std::size_t a = 0; a < simple.size(); ++a) {
      auto others = cols;
      others.erase(others.begin() + static_cast<long>(a));
      if (solve_rational(others, cols[a])) {
        bad.push_back("simple roots are linearly dependent");
        break;
      }
    }
  }
  auto exps = simple_expansions(roots, simple);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const auto& e = exps[i];
    bool ok = e.has_value();
    if (ok) {
      bool nonneg = true, nonpos = true;
      for (const auto& c : *e) {
        if (c.get_den() != 1) ok = false;
        if (c < 0) nonneg = false;
        if (c > 0) nonpos = false;
      }
      ok = ok && (nonneg || nonpos);
    }
    if (!ok)
      bad.push_back("root " + roots[i].str() +
                    " is not a non-negative or non-positive integer combination of simple roots");
  }
  return bad;
}

RootDatum::RootDatum(std::string name, std::size_t rank, std::vector<Weight> roots,
                     std::vector<Weight> coroots, std::vector<std::size_t> simple_indices)
    : name_(std::move(name)),
      rank_(rank),
      roots_(std::move(roots)),
      coroots_(std::move(coroots)),
      simple_(std::move(simple_indices)) {
  auto bad = check_axioms(rank_, roots_, coroots_, simple_);
  if (!bad.empty()) {
    std::string msg = "invalid root datum '" + name_ + "':";
    for (const auto& b : bad) msg += "\n  - " + b;
    throw PreconditionError(msg);
  }
  auto exps = simple_expansions(roots_, simple_);
  for (const auto& e : exps) {
    std::vector<int> c;
    bool pos = false;
    for (const auto& v : *e) {
      c.push_back(static_cast<int>(v.get_num().get_si()));
      if (v > 0) pos = true;
    }
    simple_coords_.push_back(c);
    positive_.push_back(pos);
  }
}

std::optional<std::size_t> RootDatum::find_root(const Weight& alpha) const {
  return index_of(roots_, alpha);
}

std::vector<std::size_t> RootDatum::positive_roots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (positive_[i]) out.push_back(i);
  return out;
}

int RootDatum::max_root_height() const {
  int h = 0;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    int s = 0;
    for (int c : simple_coords_[i]) s += c;
    h = std::max(h, s);
  }
  return h;
}

WeylElement RootDatum::reflection(std::size_t root) const {
  IntMatrix m = IntMatrix::identity(rank_);
  for (std::size_t a = 0; a < rank_; ++a)
    for (std::size_t b = 0; b < rank_; ++b)
      m(a, b) -= static_cast<long>(roots_[root][a]) * coroots_[root][b];
  return {m, m};
}

IntMatrix RootDatum::simple_coroot_matrix() const {
  IntMatrix m(simple_.size(), rank_);
  for (std::size_t i = 0; i < simple_.size(); ++i)
    for (std::size_t j = 0; j < rank_; ++j) m(i, j) = coroots_[simple_[i]][j];
  return m;
}

bool RootDatum::simply_connected_commutator() const { return torsion_free_quotient(rank_, coroots_); }

std::optional<Weight> RootDatum::integral_rho() const {
  return integer_solve(simple_coroot_matrix(), std::vector<long>(simple_.size(), 1));
}

std::optional<std::vector<Weight>> RootDatum::fundamental_weights() const {
  std::vector<Weight> out;
  const IntMatrix a = simple_coroot_matrix();
  for (std::size_t i = 0; i < simple_.size(); ++i) {
    std::vector<long> e(simple_.size(), 0);
    e[i] = 1;
    auto w = integer_solve(a, e);
    if (!w) return std::nullopt;
    out.push_back(*w);
  }
  return out;
}

std::vector<Weight> RootDatum::central_characters() const {
  return integer_kernel(simple_coroot_matrix());
}

bool RootDatum::is_dominant(const Weight& lambda) const {
  for (std::size_t s : simple_)
    if (pairing(lambda, coroots_[s]) < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Presets

RootDatum datum_from_cartan(const std::string& name, const std::vector<std::vector<int>>& cartan) {
  const std::size_t r = cartan.size();
  struct Entry {
    Weight root, coroot;
    std::vector<int> coords;
  };
  std::vector<Entry> simple;
  for (std::size_t i = 0; i < r; ++i) {
    Entry e{Weight(r), Weight(r), std::vector<int>(r, 0)};
    for (std::size_t j = 0; j < r; ++j) e.root[j] = cartan[i][j];
    e.coroot[i] = 1;
    e.coords[i] = 1;
    simple.push_back(e);
  }
  std::map<Weight, Entry> found;
  std::deque<Entry> queue;
  for (const auto& e : simple) {
    found.emplace(e.root, e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Entry e = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < r; ++j) {
      Entry n = e;
      long p = pairing(e.root, simple[j].coroot);
      long pc = pairing(simple[j].root, e.coroot);
      for (std::size_t k = 0; k < r; ++k) {
        n.root[k] -= static_cast<int>(p * simple[j].root[k]);
        n.coroot[k] -= static_cast<int>(pc * simple[j].coroot[k]);
      }
      n.coords[j] -= static_cast<int>(p);
      if (found.emplace(n.root, n).second) queue.push_back(n);
    }
  }
  std::vector<Entry> pos, neg;
  for (auto& [w, e] : found) (e.coords[0] >= 0 && std::all_of(e.coords.begin(), e.coords.end(),
                                                            [](int c) { return c >= 0; })
                                  ? pos
                                  : neg)
                                 .push_back(e);
  auto height = [](const Entry& e) {
    int s = 0;
    for (int c : e.coords) s += c;
    return s < 0 ? -s : s;
  };
  auto order = [&](const Entry& a, const Entry& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a.coords > b.coords;
  };
  std::sort(pos.begin(), pos.end(), order);
  std::vector<Weight> roots, coroots;
  for (const auto& e : pos) {
    roots.push_back(e.root);
    coroots.push_back(e.coroot);
  }
  for (const auto& e : pos) {
    roots.push_back(-e.root);
    coroots.push_back(-e.coroot);
  }
  std::vector<std::size_t> simple_idx(r);
  for (std::size_t i = 0; i < r; ++i) simple_idx[i] = i;
  return RootDatum(name, r, roots, coroots, simple_idx);
}

namespace {

RootDatum type_a_gl(const std::string& name, std::size_t n) {
  std::vector<Weight> pos;
  for (std::size_t d = 1; d < n; ++d)
    for (std::size_t i = 0; i + d < n; ++i) {
      Weight w(n);
      w[i] = 1;
      w[i + d] = -1;
      pos.push_back(w);
    }
  std::vector<Weight> roots = pos;
  for (const auto& p : pos) roots.push_back(-p);
  std::vector<std::size_t> simple(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) simple[i] = i;
  return RootDatum(name, n, roots, roots, simple);
}

RootDatum symplectic4() {
  std::vector<Weight> pos_roots = {{1, -1}, {0, 2}, {1, 1}, {2, 0}};
  std::vector<Weight> pos_coroots = {{1, -1}, {0, 1}, {1, 1}, {1, 0}};
  std::vector<Weight> roots = pos_roots, coroots = pos_coroots;
  for (std::size_t i = 0; i < pos_roots.size(); ++i) {
    roots.push_back(-pos_roots[i]);
    coroots.push_back(-pos_coroots[i]);
  }
  return RootDatum("Sp4", 2, roots, coroots, {0, 1});
}

RootDatum a1xa1() {
  std::vector<Weight> roots = {{2, 0}, {0, 2}, {-2, 0}, {0, -2}};
  std::vector<Weight> coroots = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return RootDatum("A1xA1", 2, roots, coroots, {0, 1});
}

}  // namespace

const std::vector<std::string>& preset_labels() {
  static const std::vector<std::string> labels = {"A1",  "A2",  "B2",  "G2",  "A1xA1",
                                                  "GL2", "GL3", "SL2", "SL3", "Sp4"};
  return labels;
}

namespace {
std::atomic<std::size_t> weyl_cap{kDefaultWeylCap};
}  // namespace

std::size_t default_weyl_cap() { return weyl_cap.load(); }
void set_default_weyl_cap(std::size_t cap) { weyl_cap.store(cap); }

RootDatum datum_from_preset(const std::string& label) {
  if (label == "A1" || label == "SL2") return datum_from_cartan(label, {{2}});
  if (label == "A2" || label == "SL3") return datum_from_cartan(label, {{2, -1}, {-1, 2}});
  if (label == "B2") return datum_from_cartan(label, {{2, -2}, {-1, 2}});
  if (label == "G2") return datum_from_cartan(label, {{2, -1}, {-3, 2}});
  if (label == "A1xA1") return a1xa1();
  if (label == "GL2") return type_a_gl(label, 2);
  if (label == "GL3") return type_a_gl(label, 3);
  if (label == "Sp4") return symplectic4();
  std::string known;
  for (const auto& l : preset_labels()) known += (known.empty() ? "" : ", ") + l;
  throw PreconditionError("unknown preset '" + label + "'; known presets: " + known);
}

// ---------------------------------------------------------------------------
// Weyl groups

WeylGroup generate_group(const std::vector<WeylElement>& generators, std::size_t rank,
                         std::size_t cap) {
  WeylGroup elements{WeylElement::identity(rank)};
  std::set<IntMatrix> seen{elements[0].matrix};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      WeylElement n = elements[head] * g;
      if (seen.insert(n.matrix).second) {
        if (elements.size() >= cap)
          throw ResourceError("Weyl group enumeration exceeded the cap of " + std::to_string(cap) +
                              " elements");
        elements.push_back(std::move(n));
      }
    }
  }
  return elements;
}

WeylGroup weyl_elements(const RootDatum& datum, std::size_t cap) {
  std::vector<WeylElement> gens;
  for (std::size_t s : datum.simple_indices()) gens.push_back(datum.reflection(s));
  return generate_group(gens, datum.rank(), cap);
}

bool contains(const WeylGroup& group, const WeylElement& w) {
  return std::find(group.begin(), group.end(), w) != group.end();
}

bool same_group(const WeylGroup& a, const WeylGroup& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const WeylElement& w) { return contains(b, w); });
}

WeylGroup coset_representatives(const WeylGroup& w, const WeylGroup& w1) {
  if (w.empty()) throw StructuralError("empty group");
  const std::size_t rank = w.front().rank();
  const WeylElement id = WeylElement::identity(rank);
  if (!contains(w1, id)) throw StructuralError("W1 does not contain the identity");
  for (const auto& a : w1) {
    if (!contains(w, a)) throw StructuralError("W1 is not a subset of W");
    for (const auto& b : w1)
      if (!contains(w1, a * b)) throw StructuralError("W1 is not closed under multiplication");
  }
  if (w.size() % w1.size() != 0) throw StructuralError("|W1| does not divide |W|");
  std::set<IntMatrix> covered;
  WeylGroup reps;
  auto take = [&](const WeylElement& g) {
    if (covered.count(g.matrix)) return;
    reps.push_back(g);
    for (const auto& h : w1) covered.insert((g * h).matrix);
  };
  take(id);
  for (const auto& g : w) take(g);
  return reps;
}

// ---------------------------------------------------------------------------
// Subdata

std::string to_string(SubKind k) {
  switch (k) {
    case SubKind::full: return "full";
    case SubKind::levi: return "levi";
    case SubKind::centralizer: return "centralizer";
    case SubKind::torus: return "torus";
  }
  return "?";
}

bool SubDatum::contains_root(std::size_t root) const {
  return std::find(roots.begin(), roots.end(), root) != roots.end();
}

RootDatum SubDatum::as_datum() const {
  std::vector<Weight> rs, cs;
  for (std::size_t i : roots) {
    rs.push_back(parent.roots()[i]);
    cs.push_back(parent.coroots()[i]);
  }
  // Simple system of the positive subsystem: indecomposable positive roots.
  std::vector<std::size_t> simple;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    if (!parent.is_positive(roots[a])) continue;
    bool decomposable = false;
    for (std::size_t b = 0; b < roots.size() && !decomposable; ++b) {
      if (b == a || !parent.is_positive(roots[b])) continue;
      auto rest = std::find(rs.begin(), rs.end(), rs[a] - rs[b]);
      if (rest != rs.end() && parent.is_positive(roots[static_cast<std::size_t>(rest - rs.begin())]))
        decomposable = true;
    }
    if (!decomposable) simple.push_back(a);
  }
  return RootDatum(parent.name() + "/" + to_string(kind), parent.rank(), rs, cs, simple);
}

std::string SubDatum::describe() const {
  std::ostringstream out;
  out << to_string(kind) << " of " << parent.name() << " (" << roots.size() << " roots, |W1| = "
      << weyl.size() << ")";
  return out.str();
}

namespace {

bool sub_sc(const RootDatum& parent, const std::vector<std::size_t>& roots) {
  std::vector<Weight> cs;
  for (std::size_t i : roots) cs.push_back(parent.coroots()[i]);
  return torsion_free_quotient(parent.rank(), cs);
}

// Positions S of simple roots such that `roots` is exactly the set of roots
// supported on S, if any.
std::optional<std::vector<std::size_t>> standard_levi_support(const RootDatum& d,
                                                              const std::vector<std::size_t>& roots) {
  std::vector<std::size_t> support;
  for (std::size_t p = 0; p < d.simple_indices().size(); ++p)
    if (std::find(roots.begin(), roots.end(), d.simple_indices()[p]) != roots.end())
      support.push_back(p);
  std::vector<std::size_t> expected;
  for (std::size_t i = 0; i < d.roots().size(); ++i) {
    const auto& c = d.simple_coordinates(i);
    bool inside = true;
    for (std::size_t p = 0; p < c.size(); ++p)
      if (c[p] != 0 && std::find(support.begin(), support.end(), p) == support.end()) inside = false;
    if (inside) expected.push_back(i);
  }
  std::vector<std::size_t> sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != expected) return std::nullopt;
  return support;
}

}  // namespace

SubDatum full_subdatum(const RootDatum& datum, std::size_t cap) {
  SubDatum s;
  s.parent = datum;
  for (std::size_t i = 0; i < datum.roots().size(); ++i) s.roots.push_back(i);
  s.weyl = weyl_elements(datum, cap);
  s.kind = SubKind::full;
  std::vector<std::size_t> all(datum.simple_indices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  s.levi_simple = all;
  s.simply_connected_commutator = datum.simply_connected_commutator();
  return s;
}

SubDatum torus_subdatum(const RootDatum& datum) {
  SubDatum s;
  s.parent = datum;
  s.weyl = {WeylElement::identity(datum.rank())};
  s.kind = SubKind::torus;
  s.levi_simple = std::vector<std::size_t>{};
  s.simply_connected_commutator = true;
  return s;
}

SubDatum levi_subdatum(const RootDatum& datum, const std::vector<std::size_t>& positions,
                       std::size_t cap) {
  SubDatum s;
  s.parent = datum;
  std::vector<WeylElement> gens;
  for (std::size_t p : positions) {
    if (p >= datum.simple_indices().size()) throw PreconditionError("Levi simple position out of range");
    gens.push_back(datum.reflection(datum.simple_indices()[p]));
  }
  for (std::size_t i = 0; i < datum.roots().size(); ++i) {
    const auto& c = datum.simple_coordinates(i);
    bool inside = true;
    for (std::size_t p = 0; p < c.size(); ++p)
      if (c[p] != 0 && std::find(positions.begin(), positions.end(), p) == positions.end())
        inside = false;
    if (inside) s.roots.push_back(i);
  }
  s.weyl = generate_group(gens, datum.rank(), cap);
  s.kind = s.roots.empty() ? SubKind::torus : SubKind::levi;
  std::vector<std::size_t> sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  s.levi_simple = sorted;
  s.simply_connected_commutator = sub_sc(datum, s.roots);
  return s;
}

SubDatum centralizer_subdatum(const RootDatum& datum, const TorsionPoint& q, std::size_t cap) {
  if (q.rank() != datum.rank()) throw PreconditionError("torsion point rank mismatch");
  SubDatum s;
  s.parent = datum;
  std::vector<WeylElement> gens;
  for (std::size_t i = 0; i < datum.roots().size(); ++i)
    if (q.kills(datum.roots()[i])) {
      s.roots.push_back(i);
      gens.push_back(datum.reflection(i));
    }
  s.weyl = generate_group(gens, datum.rank(), cap);
  s.kind = SubKind::centralizer;
  s.levi_simple = standard_levi_support(datum, s.roots);
  s.simply_connected_commutator = sub_sc(datum, s.roots);
  return s;
}

OrbitStabilizer orbit_and_stabilizer(const RootDatum& datum, const TorsionPoint& q,
                                     std::size_t cap) {
  OrbitStabilizer out;
  const WeylGroup w = weyl_elements(datum, cap);
  std::set<TorsionPoint> seen;
  for (const auto& g : w) {
    TorsionPoint p = g.apply(q);
    if (seen.insert(p).second) out.orbit.push_back(p);
    if (p == q) out.stabilizer.push_back(g);
  }
  const SubDatum z = centralizer_subdatum(datum, q, cap);
  out.lemma_applies = datum.simply_connected_commutator();
  out.stabilizer_is_reflection_group = same_group(out.stabilizer, z.weyl);
  if (out.lemma_applies && !out.stabilizer_is_reflection_group)
    throw StructuralError("stabilizer of " + q.str() + " in W(" + datum.name() +
                          ") differs from the reflection group of its centralizer");
  return out;
}

}  // namespace eqk
