#include "autospec/tolerances.hpp"

namespace autospec {

namespace {

template <class F>
void for_each_field(Tolerances& t, F&& f) {
  f("unimodular", t.unimodular);
  f("pole", t.pole);
  f("identity", t.identity);
  f("parabolic_band", t.parabolic_band);
  f("root_coincidence", t.root_coincidence);
  f("boundary", t.boundary);
  f("conjugacy", t.conjugacy);
  f("translation_probe", t.translation_probe);
  f("rotation_order", t.rotation_order);
  f("resolvent_singular", t.resolvent_singular);
  f("resolvent_residual", t.resolvent_residual);
  f("eigen_verify", t.eigen_verify);
  f("cauchy_tail", t.cauchy_tail);
  f("overflow", t.overflow);
}

}  // namespace

std::map<std::string, double> Tolerances::as_map() const {
  std::map<std::string, double> out;
  Tolerances copy = *this;
  for_each_field(copy, [&](const char* name, double& v) { out[name] = v; });
  out["m_max"] = m_max;
  return out;
}

bool Tolerances::set(const std::string& key, double value) {
  if (key == "m_max") {
    m_max = static_cast<int>(value);
    return true;
  }
  bool found = false;
  for_each_field(*this, [&](const char* name, double& v) {
    if (key == name) {
      v = value;
      found = true;
    }
  });
  return found;
}

}  // namespace autospec
