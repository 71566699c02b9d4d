#include <functional>
#include <sstream>

#include "hopfint/braided.hpp"
#include "hopfint/errors.hpp"
#include "hopfint/hopf.hpp"
#include "hopfint/linalg.hpp"

namespace hopfint {

namespace {

using Stage = std::function<SparseVec(const SparseVec&)>;

std::string witness_of(std::size_t index, const std::vector<std::size_t>& dims,
                       const std::vector<std::string>& labels) {
  auto idx = unflatten(index, dims);
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) os << ", ";
    os << (dims[k] == labels.size() ? labels[idx[k]] : std::to_string(idx[k]));
  }
  os << ")";
  return os.str();
}

AxiomResult compare(const std::string& name, std::vector<std::size_t> dims,
                    const std::vector<std::string>& labels, const Stage& lhs,
                    const Stage& rhs) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  for (std::size_t e = 0; e < total; ++e) {
    SparseVec v{{e, RatFunc(1)}};
    if (lhs(v) != rhs(v)) return {name, false, witness_of(e, dims, labels)};
  }
  return {name, true, {}};
}

Stage tensor(std::vector<const LinearMap*> f) {
  return [f = std::move(f)](const SparseVec& v) { return apply_tensor(f, v); };
}

Stage map(const LinearMap& f) {
  return [&f](const SparseVec& v) { return f.apply(v); };
}

Stage chain(std::vector<Stage> stages) {
  return [stages = std::move(stages)](const SparseVec& v) {
    SparseVec x = v;
    for (const auto& s : stages) x = s(x);
    return x;
  };
}

Stage identity_stage() {
  return [](const SparseVec& v) { return v; };
}

}  // namespace

AxiomReport check_structure(const HopfAlgebraData& h,
                            const LinearMap& transposition) {
  check_shapes(h);
  const std::size_t n = h.dim;
  const auto& L = h.labels;
  const LinearMap id = LinearMap::identity(n);
  LinearMap unit(1, n);
  unit.set_col(0, sparse_from_dense(h.unit));
  LinearMap counit(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!h.counit[i].is_zero()) counit.set_col(i, {{0, h.counit[i]}});
  }
  const LinearMap& m = h.mult;
  const LinearMap& d = h.comult;
  const LinearMap& s = h.antipode;
  const LinearMap& t = transposition;

  AxiomReport r;
  {
    AxiomResult left = compare("unit-law", {n}, L,
                               chain({tensor({&unit, &id}), map(m)}),
                               identity_stage());
    AxiomResult right = compare("unit-law", {n}, L,
                                chain({tensor({&id, &unit}), map(m)}),
                                identity_stage());
    r.entries.push_back(left.passed ? right : left);
  }
  r.entries.push_back(compare("associativity", {n, n, n}, L,
                              chain({tensor({&m, &id}), map(m)}),
                              chain({tensor({&id, &m}), map(m)})));
  r.entries.push_back(compare("coassociativity", {n}, L,
                              chain({map(d), tensor({&d, &id})}),
                              chain({map(d), tensor({&id, &d})})));
  {
    AxiomResult left = compare("counit-law", {n}, L,
                               chain({map(d), tensor({&counit, &id})}),
                               identity_stage());
    AxiomResult right = compare("counit-law", {n}, L,
                                chain({map(d), tensor({&id, &counit})}),
                                identity_stage());
    r.entries.push_back(left.passed ? right : left);
  }
  {
    AxiomResult a = compare("unit-grouplike", {1}, {"1"},
                            chain({map(unit), map(d)}),
                            tensor({&unit, &unit}));
    AxiomResult b = compare("unit-grouplike", {1}, {"1"},
                            chain({map(unit), map(counit)}), identity_stage());
    r.entries.push_back(a.passed ? b : a);
  }
  r.entries.push_back(compare(
      "bialgebra-law", {n, n}, L, chain({map(m), map(d)}),
      chain({tensor({&d, &d}), tensor({&id, &t, &id}), tensor({&m, &m})})));
  r.entries.push_back(compare("counit-multiplicative", {n, n}, L,
                              chain({map(m), map(counit)}),
                              tensor({&counit, &counit})));
  {
    Stage eps_unit = chain({map(counit), map(unit)});
    AxiomResult left = compare("antipode-law", {n}, L,
                               chain({map(d), tensor({&s, &id}), map(m)}),
                               eps_unit);
    AxiomResult right = compare("antipode-law", {n}, L,
                                chain({map(d), tensor({&id, &s}), map(m)}),
                                eps_unit);
    r.entries.push_back(left.passed ? right : left);
  }
  r.entries.push_back(compare("antipode-antihomomorphism", {n, n}, L,
                              chain({map(m), map(s)}),
                              chain({map(t), tensor({&s, &s}), map(m)})));
  {
    bool invertible = rank(Matrix::from_map(s)) == n;
    r.entries.push_back(
        {"antipode-invertible", invertible, invertible ? "" : "rank"});
  }
  return r;
}

AxiomReport check_hopf_axioms(const HopfAlgebraData& h) {
  return check_structure(h, LinearMap::flip(h.dim, h.dim));
}

AxiomReport check_braided_axioms(const BraidedHopfData& b) {
  const HopfAlgebraData& h = b.base;
  AxiomReport r = check_structure(h, b.psi);
  const std::size_t n = h.dim;
  const auto& L = h.labels;
  const LinearMap id = LinearMap::identity(n);
  LinearMap unit(1, n);
  unit.set_col(0, sparse_from_dense(h.unit));
  LinearMap counit(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!h.counit[i].is_zero()) counit.set_col(i, {{0, h.counit[i]}});
  }
  const LinearMap& m = h.mult;
  const LinearMap& d = h.comult;
  const LinearMap& s = h.antipode;
  const LinearMap& p = b.psi;

  {
    RowEchelon ech(n * n);
    for (std::size_t c = 0; c < n * n; ++c) ech.add_row(p.col(c));
    bool inv = ech.rank() == n * n;
    r.entries.push_back({"braiding-invertible", inv, inv ? "" : "rank"});
  }
  r.entries.push_back(compare(
      "yang-baxter", {n, n, n}, L,
      chain({tensor({&p, &id}), tensor({&id, &p}), tensor({&p, &id})}),
      chain({tensor({&id, &p}), tensor({&p, &id}), tensor({&id, &p})})));
  {
    AxiomResult a = compare("braiding-unit", {n}, L,
                            chain({tensor({&unit, &id}), map(p)}),
                            tensor({&id, &unit}));
    AxiomResult c = compare("braiding-unit", {n}, L,
                            chain({tensor({&id, &unit}), map(p)}),
                            tensor({&unit, &id}));
    r.entries.push_back(a.passed ? c : a);
  }
  {
    AxiomResult a = compare(
        "braiding-natural-mult", {n, n, n}, L, chain({tensor({&m, &id}), map(p)}),
        chain({tensor({&id, &p}), tensor({&p, &id}), tensor({&id, &m})}));
    AxiomResult c = compare(
        "braiding-natural-mult", {n, n, n}, L, chain({tensor({&id, &m}), map(p)}),
        chain({tensor({&p, &id}), tensor({&id, &p}), tensor({&m, &id})}));
    r.entries.push_back(a.passed ? c : a);
  }
  {
    AxiomResult a = compare(
        "braiding-natural-comult", {n, n}, L, chain({map(p), tensor({&id, &d})}),
        chain({tensor({&d, &id}), tensor({&id, &p}), tensor({&p, &id})}));
    AxiomResult c = compare(
        "braiding-natural-comult", {n, n}, L, chain({map(p), tensor({&d, &id})}),
        chain({tensor({&id, &d}), tensor({&p, &id}), tensor({&id, &p})}));
    r.entries.push_back(a.passed ? c : a);
  }
  {
    AxiomResult a = compare("braiding-natural-counit", {n, n}, L,
                            chain({map(p), tensor({&counit, &id})}),
                            tensor({&id, &counit}));
    AxiomResult c = compare("braiding-natural-counit", {n, n}, L,
                            chain({map(p), tensor({&id, &counit})}),
                            tensor({&counit, &id}));
    r.entries.push_back(a.passed ? c : a);
  }
  {
    AxiomResult a = compare("braiding-natural-antipode", {n, n}, L,
                            chain({tensor({&s, &id}), map(p)}),
                            chain({map(p), tensor({&id, &s})}));
    AxiomResult c = compare("braiding-natural-antipode", {n, n}, L,
                            chain({tensor({&id, &s}), map(p)}),
                            chain({map(p), tensor({&s, &id})}));
    r.entries.push_back(a.passed ? c : a);
  }
  return r;
}

}  // namespace hopfint
