#pragma once

#include <optional>
#include <vector>

#include "bridgeland/lattice.hpp"

namespace bridgeland {

// P(x, y) = (y, l*x; x, y) with x = a*sqrt(r), y = b*sqrt(s), rs = n.
struct PellMatrix {
  Surd x;
  Surd y;

  SurdMat2 matrix(long ell) const;
  bool operator==(const PellMatrix& o) const { return x == o.x && y == o.y; }
};

struct PellContext {
  long n;
  long ell;
  PellMatrix generator;
  int epsilon;
  // Only for ell = 1: the order-two element (0, 1; 1, 0).
  std::optional<PellMatrix> torsion;

  SurdMat2 generator_matrix() const { return generator.matrix(ell); }
  Context context() const { return Context(n); }
  MukaiVector v() const { return MukaiVector::of(1, 0, -ell); }
};

bool is_square_case(long n, long ell);

PellContext solve_generator(long n, long ell);

// Plain brute force over a with a doubling bound; `cap` limits a.
std::optional<PellMatrix> generator_brute_force(long n, long ell, long cap);
// Via the fundamental unit of Z[sqrt(l*n)] from the continued fraction of sqrt(l*n).
PellMatrix generator_from_unit(long n, long ell);
// Fundamental solution (X, Y) of X^2 - D*Y^2 = +-1.
std::pair<Int, Int> fundamental_unit(const Int& D);

struct Iterate {
  long m;
  Surd a;
  Surd b;
};

// P(a_m, b_m) = A^m
Iterate iterate(const PellContext& ctx, long m);
SurdMat2 generator_power(const PellContext& ctx, long m);

// (u_m, u_m') = ((a^2, ab/sqrt(n), b^2), (b^2, l*ab/sqrt(n), l^2 a^2))
std::pair<MukaiVector, MukaiVector> u_vectors(const PellContext& ctx, long m);

// b_m / (a_m sqrt(n)) and l a_m / (b_m sqrt(n)): the real-axis feet of C_m in the s coordinate.
Rat slope_b_over_a(const PellContext& ctx, long m);
Rat slope_la_over_b(const PellContext& ctx, long m);

// Isotropic class (a^2, ab/sqrt(n), b^2) of a row vector (a, b) of surds.
MukaiVector isotropic_from_row(const Surd& a, const Surd& b, const Context& ctx);

// Row-vector orbit under A: w_{-1} = seed, w_{k-1} = w_k A^{-1}, w_{k+1} = w_k A.
MukaiVector row_orbit(const PellContext& ctx, const Surd& seed_a, const Surd& seed_b, long k);

struct NumericalSolution {
  MukaiVector v1;
  MukaiVector v2;
  Int l1;
  Int l2;

  bool operator==(const NumericalSolution& o) const { return v1 == o.v1 && v2 == o.v2 && l1 == o.l1 && l2 == o.l2; }
};

// True if sol is a numerical solution of v: isotropic, <v1,v2> = -1, v = +-(l1 v1 - l2 v2), (l1-1)(l2-1) = 0.
bool is_numerical_solution(const NumericalSolution& sol, const MukaiVector& v, const Context& ctx);

std::vector<NumericalSolution> numerical_solutions(const PellContext& ctx, long m_lo, long m_hi);

struct PresentationReport {
  bool infinite;
  long count;
  bool both_presentations;
};
PresentationReport presentation_report(long n, long ell);

// Extended-real endpoint: inf = -1, 0, +1.
struct ExtRat {
  int inf;
  Rat value;

  static ExtRat finite(const Rat& q) { return {0, q}; }
  static ExtRat neg_inf() { return {-1, Rat(0)}; }
  static ExtRat pos_inf() { return {1, Rat(0)}; }
};
std::string to_string(const ExtRat& e);

struct HalfOpen {
  ExtRat lo;
  ExtRat hi;

  bool contains(const Rat& x) const;          // [lo, hi)
  bool contains_starred(const Rat& x) const;  // (lo, hi]
};

// I_m as two half-open pieces, in the s coordinate (paper slope / sqrt(n)).
std::vector<HalfOpen> interval(const PellContext& ctx, long m);

struct IntervalIndex {
  long m;
  bool starred;  // lambda also lies in I_m*
  long m_star;   // the index with lambda in I_{m_star}*
};
IntervalIndex interval_index(const PellContext& ctx, const Rat& lambda);

enum class Verdict { StableSheaf, DualStableSheaf, Both, Neither };
const char* to_string(Verdict v);
Verdict sheaf_verdict(const PellContext& ctx, const Rat& lambda, long m);

}  // namespace bridgeland
