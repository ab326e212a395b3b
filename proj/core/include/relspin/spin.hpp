#pragma once

#include "relspin/convention.hpp"
#include "relspin/equation.hpp"

namespace relspin {

/// Spin side of the correspondence: rest mass, out-of-plane spin magnitude,
/// the skew spin tensor S^{mu nu}, and its dual vector a.
struct SpinState {
  double m0 = 0.0;
  double s3 = 0.0;
  Mat3 S;
  Vec3 a{};
};

/// Planar Dixon momentum.  P is the covariant spatial pair of the
/// time-parametrized formula; P3 is the conserved space-time momentum
/// m0 u + sgn_g s3 (ud x u).
struct DixonMomentum {
  Cov2 P{};
  Vec3 P3{};
};

/// Calibrated global sign in P = sigma s3 p (with sgn_g = +1); fixed once by
/// the coincidence oracle and recorded here.
inline constexpr double kCoincidenceSign = -1.0;

/// a_mu = 1/2 eps_{nu lam mu} S^{nu lam}, returned contravariant.
/// Throws NotSkew when S is not antisymmetric.
Vec3 dual_spin(const Mat3& S, const Convention& conv);

/// Inverse of dual_spin: S^{nu lam} = eps^{nu lam mu} a_mu.  The
/// normalization makes the round trip the identity (checked in tests, not
/// assumed).
Mat3 undual_spin(Vec3 a, const Convention& conv);

/// max(|u_nu S^{mu nu}|, |a x u|): both characterizations of the
/// supplementary condition; they vanish together.
double pirani_check(const Mat3& S, Vec3 u, const Convention& conv);

/// mu = m0 / s3, the spin-induced mass renormalization.
double mass_renormalization(double m0, double s3);

/// The supplementary-condition-consistent spin state along a worldline:
/// a = -(m0/mu) u, S its undual, s3 = -a.u.
SpinState pirani_spin_from_motion(const ProperJet& pjet, double m0, double mu,
                                  const Convention& conv);

/// Planar momentum P_a = m0 v_a / W - sgn_g s3 (*v')_a / W^3, plus the
/// embedded conserved momentum P3.
DixonMomentum dixon_momentum(Vec2 v, Vec2 vp, double m0, double s3,
                             const Convention& conv);

/// |P - sigma s3 p| with the recorded sigma; closes below 1e-10 exactly when
/// mu = m0/s3 relates the two pictures.
double momentum_coincidence(Vec2 v, Vec2 vp, double m0, double s3,
                            const Convention& conv);

struct DixonResiduals {
  double momentum_drift = 0.0;  // max |P3(tau) - P3(0)| along the trajectory
  double spin_equation = 0.0;   // max |dS/dtau - 2 P3(0) ^ u| by central differences
};

/// Residuals of the momentum/spin evolution pair along a proper-time
/// trajectory, with spin built pointwise from the motion (zero force).
DixonResiduals dixon_residuals(const ProperTrajectory& traj, double m0, double mu,
                               const Convention& conv);

/// Residual of the momentum-balance form m0 ud + a x udd; vanishes along
/// solutions with supplementary-condition spin.
double mathisson_residual(const ProperJet& pjet, const SpinState& spin,
                          const Convention& conv);

/// Out-of-plane row of the embedded 4D system contracted with udd, realized
/// as |(a x u) . udd|; identically zero for supplementary-condition spin, so
/// the planar split is self-consistent.
double plane_consistency(const ProperJet& pjet, const SpinState& spin,
                         const Convention& conv);

}  // namespace relspin
