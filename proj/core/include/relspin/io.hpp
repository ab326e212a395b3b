#pragma once

#include <ostream>
#include <string>

#include "relspin/convention.hpp"
#include "relspin/equation.hpp"
#include "relspin/hamiltonian.hpp"

namespace relspin::io {

/// CSV with header t,x1,x2,v1,v2,vp1,vp2.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

/// CSV with header t,x1,x2,p1,p2,pp1,pp2,H.
void write_canonical_csv(std::ostream& os, const CanonicalTrajectory& traj);

/// Trajectory samples as a JSON array (alternative emission format).
std::string trajectory_json(const Trajectory& traj);

/// Run manifest: initial data, mu, method, step, convention.
std::string trajectory_manifest(const Trajectory& traj, Vec2 x0, Vec2 v0, Vec2 vp0,
                                const Convention& conv);

}  // namespace relspin::io
