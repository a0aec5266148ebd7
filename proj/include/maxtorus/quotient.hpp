#pragma once

#include "maxtorus/fan.hpp"
#include "maxtorus/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace maxtorus {

/// Machine-readable condition failure.
struct Diagnostic {
  std::string code;
  std::string message;
};

struct ConditionResult {
  bool holds = true;
  std::vector<Diagnostic> diagnostics;

  void fail(std::string code, std::string message) {
    holds = false;
    diagnostics.push_back({std::move(code), std::move(message)});
  }
};

/// Real basis (RREF rows) of p(h) = span{Re v, Im v} ⊂ R^m.
std::vector<RationalVector> projection_p(const ComplexSubspace& h);

struct RealIntersections {
  std::vector<RationalVector> h_cap_t;   // basis of h ∩ t
  std::vector<RationalVector> h_cap_it;  // basis of y with i·y ∈ h
  bool trivial() const { return h_cap_t.empty() && h_cap_it.empty(); }
};

RealIntersections check_h_cap_t(const ComplexSubspace& h);

/// Rows: primitive integer basis of the annihilator of pH in R^n, in the
/// nullspace order of the pH matrix.
RationalMatrix quotient_map_q(std::size_t n, const std::vector<RationalVector>& pH);
/// Throws std::domain_error("quotient map requires rational data").
RationalMatrix quotient_map_q(const SymbolicSubspace& h);

/// Image of the fan under q (rays q·a_i, rational, no primitivity).
Fan project_fan(const Fan& fan, const RationalMatrix& q);

/// Condition (b): q injective on every cone, q(Σ) a fan, q(Σ) complete.
ConditionResult check_condition_b(const Fan& fan, const ComplexSubspace& h,
                                  std::uint64_t seed = kDefaultSeed);
ConditionResult check_condition_b(const Fan& fan, const RationalMatrix& q,
                                  std::uint64_t seed = kDefaultSeed);
ConditionResult check_condition_b(const Fan& fan, const SymbolicSubspace& h,
                                  std::uint64_t seed = kDefaultSeed);

/// Condition (a) of the complex construction, decided per maximal face with
/// exp(x) = (e^{2πi x_j}).
ConditionResult check_condition_a_I(const SimplicialComplex& k, const ComplexSubspace& h);

enum class Construction { I, II };

struct ManifoldDescriptor {
  Construction construction = Construction::II;
  std::size_t dim_C_M = 0;
  std::size_t dim_T = 0;
  std::size_t max_stabilizer_dim = 0;
  std::size_t foliation_dim = 0;
  bool h_cap_t_trivial = true;
  bool h_cap_it_trivial = true;
  bool condition_a = true;
  bool condition_b = true;
  bool maximality = true;
};

struct ValidationReport {
  bool valid = true;
  ManifoldDescriptor descriptor;
  std::vector<Diagnostic> issues;
};

ValidationReport validate_construction_II(const Fan& fan, const ComplexSubspace& h,
                                          std::uint64_t seed = kDefaultSeed);
ValidationReport validate_construction_I(const SimplicialComplex& k, const ComplexSubspace& h,
                                         std::uint64_t seed = kDefaultSeed);

struct FoliationData {
  ComplexSubspace conjugate;
  std::size_t h_cap_hbar_dim = 0;
  std::size_t leaf_dim = 0;
  bool discrete = true;
  std::optional<bool> consistent_with_fan;  // set when a fan is supplied
};

FoliationData canonical_foliation(const ComplexSubspace& h, const Fan* fan = nullptr);

struct LiftResult {
  SimplicialComplex complex;
  ComplexSubspace h;
  std::size_t ghosts = 0;        // torus_ghosts + invariants.size()
  std::size_t torus_ghosts = 0;
  IntegerVector invariants;      // component-group invariant factors > 1
};

/// Presents V_Σ/H as U(K)/H'' with H'' connected. Throws
/// std::invalid_argument when (Σ, h) is rejected by validate_construction_II
/// and std::logic_error if the lifted data fails its own validation.
LiftResult cox_batyrev_lift(const Fan& fan, const ComplexSubspace& h,
                            std::uint64_t seed = kDefaultSeed);

struct DivisorHypotheses {
  bool simply_connected = false;
  bool generic_annihilator = false;
  std::string note;
};

DivisorHypotheses divisor_hypotheses(const SimplicialComplex& k, const SymbolicSubspace& h);
DivisorHypotheses divisor_hypotheses(const SimplicialComplex& k, const ComplexSubspace& h);

}  // namespace maxtorus
