#include "relspin/io.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace relspin::io {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,x1,x2,v1,v2,vp1,vp2\n";
  for (const Jet& j : traj.samples)
    os << num(j.t) << ',' << num(j.x[0]) << ',' << num(j.x[1]) << ',' << num(j.v[0])
       << ',' << num(j.v[1]) << ',' << num(j.vp[0]) << ',' << num(j.vp[1]) << '\n';
}

void write_canonical_csv(std::ostream& os, const CanonicalTrajectory& traj) {
  os << "t,x1,x2,p1,p2,pp1,pp2,H\n";
  for (const CanonicalState& s : traj.samples)
    os << num(s.t) << ',' << num(s.x[0]) << ',' << num(s.x[1]) << ',' << num(s.p[0])
       << ',' << num(s.p[1]) << ',' << num(s.pp[0]) << ',' << num(s.pp[1]) << ','
       << num(s.H) << '\n';
}

std::string trajectory_json(const Trajectory& traj) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Jet& j : traj.samples) {
    nlohmann::ordered_json row;
    row["t"] = j.t;
    row["x"] = {j.x[0], j.x[1]};
    row["v"] = {j.v[0], j.v[1]};
    row["vp"] = {j.vp[0], j.vp[1]};
    arr.push_back(row);
  }
  return arr.dump();
}

std::string trajectory_manifest(const Trajectory& traj, Vec2 x0, Vec2 v0, Vec2 vp0,
                                const Convention& conv) {
  nlohmann::ordered_json j;
  j["initial"]["x"] = {x0[0], x0[1]};
  j["initial"]["v"] = {v0[0], v0[1]};
  j["initial"]["vp"] = {vp0[0], vp0[1]};
  j["mu"] = traj.mu;
  j["method"] = method_name(traj.method);
  j["step"] = traj.step;
  j["convention"] = nlohmann::ordered_json::parse(conv.to_json());
  return j.dump(2);
}

}  // namespace relspin::io
