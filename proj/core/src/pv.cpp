#include "soilpv/pv.hpp"

#include <cmath>
#include <string>

#include "soilpv/errors.hpp"

namespace soilpv::pv {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

void PanelSpec::validate() const {
  require(isc_ref > 0.0, "panel.isc_ref must be > 0");
  require(voc_ref > 0.0, "panel.voc_ref must be > 0");
  require(a_ref > 0.0, "panel.a_ref must be > 0");
  require(g_ref > 0.0, "panel.g_ref must be > 0");
  require(t_ref > 0.0, "panel.t_ref must be > 0");
  require(std::isfinite(temp_coeff_i) && std::isfinite(temp_coeff_v),
          "panel temperature coefficients must be finite");
  require(saturation_current() > 0.0,
          "panel saturation current underflows; voc_ref / a_ref too large");
}

double PanelSpec::saturation_current() const {
  return isc_ref / std::expm1(voc_ref / a_ref);
}

double photocurrent(const PanelSpec& spec, double g, double t) {
  if (!(g >= 0.0)) throw DomainError("irradiance must be >= 0");
  const double iph =
      spec.isc_ref * (g / spec.g_ref) * (1.0 + spec.temp_coeff_i * (t - spec.t_ref));
  return iph > 0.0 ? iph : 0.0;
}

double diode_scale(const PanelSpec& spec, double t) {
  const double voc_t = spec.voc_ref + spec.temp_coeff_v * (t - spec.t_ref);
  if (!(voc_t > 0.0)) throw DomainError("temperature drives open-circuit voltage <= 0");
  return spec.a_ref * voc_t / spec.voc_ref;
}

double open_circuit_voltage(const PanelSpec& spec, double g, double t) {
  const double iph = photocurrent(spec, g, t);
  return diode_scale(spec, t) * std::log1p(iph / spec.saturation_current());
}

double panel_current(const PanelSpec& spec, double v, double g, double t) {
  if (!(v >= 0.0)) throw DomainError("panel voltage must be >= 0");
  const double iph = photocurrent(spec, g, t);
  const double i = iph - spec.saturation_current() * std::expm1(v / diode_scale(spec, t));
  return i > 0.0 ? i : 0.0;
}

OperatingPoint operating_point(const PanelSpec& spec, double v, double g, double t) {
  const double i = panel_current(spec, v, g, t);
  return {v, i, v * i};
}

std::vector<OperatingPoint> pv_curve(const PanelSpec& spec, double g, double t,
                                     std::size_t n) {
  if (n < 2) throw DomainError("pv_curve needs at least 2 points");
  const double voc = open_circuit_voltage(spec, g, t);
  std::vector<OperatingPoint> points;
  points.reserve(n);
  const double last = static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double v = k + 1 == n ? voc : voc * (static_cast<double>(k) / last);
    points.push_back(operating_point(spec, v, g, t));
  }
  return points;
}

OperatingPoint mpp_oracle(const PanelSpec& spec, double g, double t,
                          std::size_t resolution) {
  if (resolution < 1000) throw DomainError("mpp_oracle resolution must be >= 1000");
  const double voc = open_circuit_voltage(spec, g, t);
  const double last = static_cast<double>(resolution - 1);
  OperatingPoint best = operating_point(spec, 0.0, g, t);
  for (std::size_t k = 1; k < resolution; ++k) {
    const double v = voc * (static_cast<double>(k) / last);
    const OperatingPoint p = operating_point(spec, v, g, t);
    if (p.power > best.power) best = p;
  }
  return best;
}

}  // namespace soilpv::pv
