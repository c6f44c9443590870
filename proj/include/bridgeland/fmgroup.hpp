#pragma once

#include <optional>
#include <utility>

#include "bridgeland/pell.hpp"
#include "bridgeland/walls.hpp"

namespace bridgeland {

// (a b; c d) with a = alpha sqrt(r), d = delta sqrt(r), b = beta sqrt(s), c = gamma sqrt(s), rs = n.
struct GMatrix {
  SurdMat2 m;
  long r;
  long s;
  int det;

  bool operator==(const GMatrix& o) const { return m == o.m; }
};

std::optional<GMatrix> g_membership(const SurdMat2& m, const Context& ctx);
GMatrix to_g(const SurdMat2& m, const Context& ctx);  // NotInGHat
GMatrix g_mul(const GMatrix& x, const GMatrix& y, const Context& ctx);
GMatrix g_inv(const GMatrix& x, const Context& ctx);
GMatrix delta(const Context& ctx);
// (a b; c d) -> (d b; c a)
SurdMat2 swap_diagonal(const SurdMat2& m);

// Right action: iota^{-1}(g^T iota(v) g) with iota(v) = (r, d sqrt(n); d sqrt(n), a).
MukaiVector act_on_vector(const MukaiVector& v, const GMatrix& g, const Context& ctx);

enum class MatrixConvention {
  Reverse,      // (d, b; c, a): the transform in the opposite direction
  ReverseDual,  // (d, -b; -c, a)
  Dual,         // (a, -b; -c, d)
};
GMatrix theta_phi_convert(const GMatrix& g, MatrixConvention conv, const Context& ctx);

// Determinant +1 acts by (az+b)/(cz+d); determinant -1 acts on conj(z).
QnComplex mobius(const GMatrix& g, const QnComplex& z, const Context& ctx);

// zeta * Z_{g.z}(image) == Z_z(v) with zeta = -(cz+d)^2 and image = -(v . swap_diagonal(g)).
// With negative_control the image uses g itself.
bool charge_compat_check(const GMatrix& g, const MukaiVector& v, const QnComplex& z, const Context& ctx,
                         bool negative_control = false);

struct FMDescriptor {
  GMatrix matrix;
  bool contravariant;
  int shift_note;
  long m;
};

// theta(Psi_m) = A^{-m} Delta A^m
FMDescriptor psi_map(const PellContext& pell, long m);
Wall psi_apply_to_wall(const FMDescriptor& psi, const Wall& w, const PellContext& pell);

struct ThetaIdentity {
  bool exact;      // A^{m+k} theta(Psi_m) == Delta A^{m-k}
  bool projective; // equal up to sign
  bool signed_ok;  // A^{m+k} theta(Psi_m) == eps^k Delta A^{m-k}
};
ThetaIdentity theta_identity(const PellContext& pell, long m, long k);

// swap_diagonal(T) T == +-A^{2m} for T = (b, l a; eps^m a, eps^m b).
bool remark_two_m(const PellContext& pell, long m);

// C_m for m in [m_lo, m_hi] plus the images of the walls strictly between C_0 and C_-1.
std::vector<Wall> walls_in_range(const PellContext& pell, long m_lo, long m_hi, int jobs = 1);

std::pair<Rat, Rat> param_transform(const Rat& lambda, const Int& r1, const Rat& s, const Rat& t_sq,
                                    const Context& ctx);
// The same map as w -> 1/(|r1| n (lambda - w)) evaluated in Q(sqrt(n), sqrt(t^2))(i).
bool param_transform_matches_mobius(const Rat& lambda, const Int& r1, const Rat& s, const Rat& t_sq,
                                    const Context& ctx);

enum class Side { Inside, Boundary, Outside };
const char* to_string(Side s);

struct HalfPlaneCheck {
  Side disk;
  Side image;
  bool consistent;
};
HalfPlaneCheck half_plane_image_check(const MukaiVector& v, const Rat& lambda, const Int& r1,
                                      const StabilityPoint& pt, const Context& ctx);

bool gamma0_check(const GMatrix& g, const Context& ctx);

GMatrix parse_gmatrix(const std::string& text, const Context& ctx);
QnComplex parse_point(const std::string& text, const Context& ctx);

}  // namespace bridgeland
