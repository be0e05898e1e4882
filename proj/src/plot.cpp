#include "shapekit/plot.hpp"

#include <cstdio>
#include <sstream>

#include "shapekit/error.hpp"

namespace shapekit {

namespace {

constexpr int kSize = 440;
constexpr int kMargin = 20;
constexpr int kInner = kSize - 2 * kMargin;

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Frame {
  Rational scale;
  std::string x(const Rational& w1) const { return fixed3(Rational(kMargin + w1 * scale).get_d()); }
  std::string y(const Rational& w2) const { return fixed3(Rational(kMargin + kInner - w2 * scale).get_d()); }
};

void check_viewport(const Rational& W) {
  if (W <= 0) throw Error(ErrorCode::NonPositiveInput, "viewport must be positive", {{"viewport", to_string(W)}});
}

}  // namespace

std::string region_csv(const Region& r, const Rational& viewport) {
  check_viewport(viewport);
  std::ostringstream os;
  os << "cell,vertex_index,w1,w2\n";
  auto polys = cell_polygons(r, viewport);
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j < polys[i].size(); ++j)
      os << i << ',' << j << ',' << to_string(polys[i][j].w1) << ',' << to_string(polys[i][j].w2) << '\n';
  return os.str();
}

std::string region_svg(const Region& r, const Rational& viewport) {
  check_viewport(viewport);
  Frame f{Rational(kInner) / viewport};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  os << "<title>" << r.domain.str() << ' ' << tag_name(r.tag) << "</title>\n";
  os << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kInner << "\" height=\"" << kInner
     << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

  auto polys = cell_polygons(r, viewport);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& p = polys[i];
    if (p.empty()) continue;
    std::string d;
    for (std::size_t j = 0; j < p.size(); ++j)
      d += (j ? " L " : "M ") + f.x(p[j].w1) + ' ' + f.y(p[j].w2);
    if (p.size() == 2) {
      os << "<path class=\"cell\" data-cell=\"" << i << "\" d=\"" << d
         << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"3\"/>\n";
    } else {
      os << "<path class=\"cell\" data-cell=\"" << i << "\" d=\"" << d
         << " Z\" fill=\"#8fb3e8\" fill-opacity=\"0.7\" stroke=\"#1f4e9c\" stroke-width=\"1\"/>\n";
    }
  }

  // boundary lines of the fundamental domain
  auto dashed = [&](const Rational& slope) {
    Rational w1 = slope >= 1 ? viewport / slope : viewport;
    os << "<line class=\"domain\" x1=\"" << f.x(0) << "\" y1=\"" << f.y(0) << "\" x2=\"" << f.x(w1) << "\" y2=\""
       << f.y(w1 * slope) << "\" stroke=\"#808080\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
  };
  dashed(1);
  if (r.tag == FundamentalDomain::FullShape) dashed(2);
  os << "</svg>\n";
  return os.str();
}

}  // namespace shapekit
