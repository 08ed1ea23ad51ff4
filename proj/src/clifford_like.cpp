// Copyright 2026 The qudit-ib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quditib/clifford_like.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "quditib/errors.hpp"

namespace quditib {

// --- DiagonalLattice --------------------------------------------------------

DiagonalLattice::DiagonalLattice(RingMatrix howell) : basis_(std::move(howell)) {
  const auto cols = pivot_columns(basis_);
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    rings_.push_back(basis_.modulus() / basis_.at(r, cols[r]));
  }
}

DiagonalLattice DiagonalLattice::from_generators(const RingMatrix& generators) {
  return DiagonalLattice(howell_form(generators));
}

DiagonalLattice DiagonalLattice::from_elements(std::span<const PhaseExponents> elements,
                                               std::size_t d, Residue modulus) {
  RingMatrix m(std::max<std::size_t>(elements.size(), 1), d, modulus);
  for (std::size_t r = 0; r < elements.size(); ++r) {
    if (elements[r].dimension() != d || elements[r].modulus() != modulus) {
      throw ShapeError("lattice element has the wrong shape");
    }
    for (std::size_t c = 0; c < d; ++c) m.set(r, c, elements[r][c]);
  }
  return from_generators(m);
}

std::uint64_t DiagonalLattice::order() const {
  std::uint64_t n = 1;
  for (Residue r : rings_) n *= static_cast<std::uint64_t>(r);
  return n;
}

bool DiagonalLattice::contains(const PhaseExponents& e) const {
  return coordinates(e).has_value();
}

std::optional<std::vector<Residue>> DiagonalLattice::coordinates(const PhaseExponents& e) const {
  auto c = howell_coordinates(basis_, e.to_ring_vector());
  if (!c) return std::nullopt;
  return std::vector<Residue>(c->values().begin(), c->values().end());
}

PhaseExponents DiagonalLattice::element(std::span<const Residue> coordinates) const {
  if (coordinates.size() != basis_.rows()) throw ShapeError("coordinate count mismatch");
  std::vector<Residue> e(dimension(), 0);
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    for (std::size_t c = 0; c < dimension(); ++c) e[c] += coordinates[r] * basis_.at(r, c);
  }
  return PhaseExponents(std::move(e), modulus());
}

PhaseExponents DiagonalLattice::element_at(std::uint64_t index) const {
  std::vector<Residue> coords(rings_.size());
  for (std::size_t i = rings_.size(); i-- > 0;) {
    const auto ring = static_cast<std::uint64_t>(rings_[i]);
    coords[i] = static_cast<Residue>(index % ring);
    index /= ring;
  }
  return element(coords);
}

std::vector<PhaseExponents> DiagonalLattice::elements() const {
  std::vector<PhaseExponents> out;
  out.reserve(order());
  for (std::uint64_t i = 0; i < order(); ++i) out.push_back(element_at(i));
  return out;
}

// --- Construction pipeline --------------------------------------------------

namespace {

bool diag_normalizes_pauli(const PhaseExponents& e, int d) {
  const CMatrix diag = e.materialize();
  for (const auto& p : pauli_group_generators(d)) {
    if (!is_pauli_up_to_phase(diag * p * diag.adjoint(), d)) return false;
  }
  return true;
}

bool perm_normalizes_pauli(const Permutation& sigma, int d) {
  const CMatrix x = perm_matrix(sigma);
  for (const auto& p : pauli_group_generators(d)) {
    if (!is_pauli_up_to_phase(x * p * x.adjoint(), d)) return false;
  }
  return true;
}

Residue additive_order(const PhaseExponents& e) {
  Residue g = e.modulus();
  for (Residue x : e.exponents()) g = std::gcd(g, x);
  return e.modulus() / g;
}

}  // namespace

DiagonalLattice build_cprime_lattice(int d) {
  const auto dim = QuditDimension::of(d);
  const auto t = t_gate(d);
  std::vector<PhaseExponents> gens;
  for (const auto& sigma : all_permutations(static_cast<std::size_t>(d))) {
    gens.push_back(conjugate_diag_by_perm(t, sigma));
  }
  return DiagonalLattice::from_elements(gens, static_cast<std::size_t>(d), dim.root_order);
}

DiagonalLattice normalizing_sublattice(const DiagonalLattice& cprime, int d) {
  // Z commutes with every diagonal, so in practice only the X test can fail.
  std::vector<PhaseExponents> survivors;
  for (const auto& e : cprime.elements()) {
    if (diag_normalizes_pauli(e, d)) survivors.push_back(e);
  }
  return DiagonalLattice::from_elements(survivors, cprime.dimension(), cprime.modulus());
}

DiagonalLattice close_under_permutation(const DiagonalLattice& lattice, int d) {
  const auto perms = all_permutations(static_cast<std::size_t>(d));
  DiagonalLattice current = lattice;
  while (true) {
    std::vector<PhaseExponents> gens;
    for (std::size_t r = 0; r < current.basis().rows(); ++r) {
      const auto row = PhaseExponents::from(current.basis().row_vector(r));
      for (const auto& sigma : perms) gens.push_back(conjugate_diag_by_perm(row, sigma));
    }
    auto next = DiagonalLattice::from_elements(gens, current.dimension(), current.modulus());
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<TabulatedGenerator> tabulated_generators(int d) {
  const auto dim = QuditDimension::of(d);
  const Residue n = dim.root_order;
  if (d == 3) {
    return {{PhaseExponents({2, 5, 2}, n), 9}, {PhaseExponents({3, 3, 3}, n), 9}};
  }
  return {{PhaseExponents({0, 2, 2, 0}, n), 4},
          {PhaseExponents({4, 4, 4, 0}, n), 2},
          {PhaseExponents({4, 4, 6, 6}, n), 4},
          {PhaseExponents({5, 5, 5, 5}, n), 8}};
}

// --- CliffordLikeGroup ------------------------------------------------------

CliffordLikeGroup::CliffordLikeGroup(QuditDimension dim, DiagonalLattice lattice)
    : dim_(dim),
      lattice_(std::move(lattice)),
      perms_(all_permutations(static_cast<std::size_t>(dim.d))) {
  const auto t = t_gate(dim_.d);
  for (int p = 1; p <= dim_.root_order; ++p) {
    if (lattice_.contains(t.scaled(p))) {
      p_ = p;
      break;
    }
  }
  if (p_ == 0) throw ConstructionError("no power of T lies in the group");
}

CliffordLikeGroup CliffordLikeGroup::build(int d, std::size_t closure_trials) {
  const auto dim = QuditDimension::of(d);
  const auto cprime = build_cprime_lattice(d);
  const auto normalizing = normalizing_sublattice(cprime, d);
  auto closed = close_under_permutation(normalizing, d);

  CliffordLikeGroup group(dim, closed);
  BuildReport& rep = group.report_;
  rep.dimension = d;
  rep.root_order = dim.root_order;
  rep.cprime_order = cprime.order();
  rep.cprime_basis = cprime.basis();
  rep.normalizing_order = normalizing.order();
  rep.normalizing_basis = normalizing.basis();
  rep.lattice_basis = closed.basis();
  rep.exponent_rings = closed.exponent_rings();
  rep.lattice_order = closed.order();
  rep.group_order = group.order();
  rep.interleaving_power = group.p_;
  rep.t_in_group = closed.contains(t_gate(d));

  for (const auto& e : closed.elements()) {
    if (diag_normalizes_pauli(e, d)) ++rep.lattice_normalizing_count;
  }
  for (const auto& sigma : group.perms_) {
    if (perm_normalizes_pauli(sigma, d)) ++rep.normalizing_permutations;
  }

  // Closure on random pairs: products and inverses stay in canonical form.
  Rng rng(0x5eed0000u + static_cast<unsigned>(d));
  rep.closure_trials = closure_trials;
  for (std::size_t i = 0; i < closure_trials; ++i) {
    const auto a = group.sample_uniform(rng);
    const auto b = group.sample_uniform(rng);
    const auto ab = group.compose(a, b);
    const auto inv = group.inverse(a);
    if (!group.contains(ab) || !group.contains(inv) || group.compose(a, inv) != group.identity()) {
      throw ConstructionError("closure check failed for dimension " + std::to_string(d));
    }
  }
  rep.closure_ok = true;
  if (group.order() != group.perms_.size() * closed.order()) {
    throw ConstructionError("group order does not factor as |S_d| x |lattice|");
  }

  std::vector<PhaseExponents> tab_exps;
  for (const auto& [e, ring] : tabulated_generators(d)) {
    tab_exps.push_back(e);
    rep.tabulated.push_back(
        {e, ring, additive_order(e), closed.contains(e), diag_normalizes_pauli(e, d)});
  }
  const auto tab_span =
      DiagonalLattice::from_elements(tab_exps, static_cast<std::size_t>(d), dim.root_order);
  rep.tabulated_span_order = tab_span.order();

  if (rep.tabulated_span_order != rep.lattice_order) {
    std::ostringstream os;
    os << "tabulated generators span " << rep.tabulated_span_order << " of the "
       << rep.lattice_order << " lattice elements";
    for (const auto& e : closed.elements()) {
      if (!tab_span.contains(e)) {
        os << "; e.g. " << e.to_string() << " is in the lattice but not in their span";
        break;
      }
    }
    rep.notes.push_back(os.str());
  } else {
    rep.notes.push_back("tabulated generators span the computed lattice exactly");
  }
  if (rep.lattice_normalizing_count != rep.lattice_order) {
    rep.notes.push_back(std::to_string(rep.lattice_order - rep.lattice_normalizing_count) +
                        " of " + std::to_string(rep.lattice_order) +
                        " lattice elements do not normalize the Pauli group; they enter "
                        "through conjugation by non-Clifford permutations");
  }
  if (rep.normalizing_permutations != group.perms_.size()) {
    rep.notes.push_back(std::to_string(group.perms_.size() - rep.normalizing_permutations) +
                        " permutation gates do not normalize the Pauli group");
  }
  return group;
}

MonomialElement CliffordLikeGroup::identity() const {
  return {Permutation::identity(perms_.front().size()),
          PhaseExponents::zero(lattice_.dimension(), lattice_.modulus())};
}

bool CliffordLikeGroup::contains(const MonomialElement& g) const {
  return g.perm.size() == lattice_.dimension() && g.diag.modulus() == lattice_.modulus() &&
         lattice_.contains(g.diag);
}

MonomialElement CliffordLikeGroup::compose(const MonomialElement& a,
                                           const MonomialElement& b) const {
  // X_t^dagger D X_t has exponents e_{t(i)}, i.e. D conjugated by t^{-1}.
  const auto moved = conjugate_diag_by_perm(a.diag, b.perm.inverse());
  const auto diag = moved + b.diag;
  const auto coords = lattice_.coordinates(diag);
  if (!coords) throw ConstructionError("product " + diag.to_string() + " left the lattice");
  return {a.perm * b.perm, lattice_.element(*coords)};
}

MonomialElement CliffordLikeGroup::inverse(const MonomialElement& g) const {
  const auto diag = conjugate_diag_by_perm(-g.diag, g.perm);
  const auto coords = lattice_.coordinates(diag);
  if (!coords) throw ConstructionError("inverse " + diag.to_string() + " left the lattice");
  return {g.perm.inverse(), lattice_.element(*coords)};
}

MonomialElement CliffordLikeGroup::element_at(std::uint64_t index) const {
  if (index >= order()) throw RangeError("group element index out of range");
  const auto lat = lattice_.order();
  return {perms_[index / lat], lattice_.element_at(index % lat)};
}

std::vector<MonomialElement> CliffordLikeGroup::enumerate(std::uint64_t cap) const {
  if (order() > cap) {
    throw EnumerationCapExceeded("group order " + std::to_string(order()) +
                                 " exceeds enumeration cap " + std::to_string(cap));
  }
  std::vector<MonomialElement> out;
  out.reserve(order());
  for (std::uint64_t i = 0; i < order(); ++i) out.push_back(element_at(i));
  return out;
}

MonomialElement CliffordLikeGroup::sample_uniform(Rng& rng) const {
  std::uniform_int_distribution<std::uint64_t> pick(0, order() - 1);
  return element_at(pick(rng));
}

MonomialElement CliffordLikeGroup::t_power_element() const {
  return {Permutation::identity(perms_.front().size()), t_gate(dim_.d).scaled(p_)};
}

}  // namespace quditib
