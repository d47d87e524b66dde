#include "tropfan/svg.hpp"

#include "tropfan/error.hpp"

#include <cmath>
#include <cstdio>

namespace tropfan {

namespace {

constexpr double kSize = 240.0;
constexpr double kCenter = kSize / 2;
constexpr double kRadius = 90.0;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const WeightedFan& x) {
  if (x.ambient_dim() != 2) {
    throw Error(ErrorCode::Unsupported, "plotting needs a fan in R^2, got R^" +
                                            std::to_string(x.ambient_dim()));
  }
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"240\" height=\"240\" "
                    "viewBox=\"0 0 240 240\">\n";
  out += "  <rect width=\"240\" height=\"240\" fill=\"white\"/>\n";
  for (const Ray& r : x.rays()) {
    const double dx = r.direction[0].convert_to<double>();
    const double dy = r.direction[1].convert_to<double>();
    const double len = std::hypot(dx, dy);
    // SVG y grows downwards.
    const double ex = kCenter + kRadius * dx / len;
    const double ey = kCenter - kRadius * dy / len;
    const double lx = kCenter + (kRadius + 14) * dx / len;
    const double ly = kCenter - (kRadius + 14) * dy / len;
    out += "  <line x1=\"" + fixed(kCenter) + "\" y1=\"" + fixed(kCenter) + "\" x2=\"" + fixed(ex) +
           "\" y2=\"" + fixed(ey) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    const std::string label = ray_name(r) + " w=" + to_string(r.weight);
    out += "  <text x=\"" + fixed(lx) + "\" y=\"" + fixed(ly) +
           "\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + label +
           "</text>\n";
  }
  out += "  <circle cx=\"" + fixed(kCenter) + "\" cy=\"" + fixed(kCenter) + "\" r=\"3\" fill=\"black\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace tropfan
