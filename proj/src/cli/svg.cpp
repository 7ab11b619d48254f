#include "neuberg/svg.hpp"

#include <algorithm>
#include <sstream>

namespace neuberg {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string scatter_svg(std::uint64_t p, const std::vector<Pt>& points, const std::vector<PlotLabel>& labels,
                        const std::string& title) {
  // Cells shrink with p but stay visible; the margin holds axis numbers.
  const std::uint64_t cell = std::max<std::uint64_t>(4, 640 / std::max<std::uint64_t>(p, 1));
  const std::uint64_t margin = 40;
  const std::uint64_t side = cell * p;
  const std::uint64_t width = side + 2 * margin, height = side + 2 * margin;
  auto cx = [&](std::uint64_t x) { return margin + x * cell + cell / 2; };
  auto cy = [&](std::uint64_t y) { return margin + (p - 1 - y) * cell + cell / 2; };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  o << "<title>" << escape(title) << "</title>\n";
  o << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  o << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << side << "\" height=\"" << side
    << "\" fill=\"none\" stroke=\"#888\"/>\n";
  o << "<text x=\"" << margin << "\" y=\"" << margin / 2 << "\" font-family=\"sans-serif\" font-size=\"14\">"
    << escape(title) << "</text>\n";
  if (p <= 128) {
    o << "<g fill=\"#ddd\">\n";
    for (std::uint64_t x = 0; x < p; ++x) {
      for (std::uint64_t y = 0; y < p; ++y) {
        o << "<circle cx=\"" << cx(x) << "\" cy=\"" << cy(y) << "\" r=\"1\"/>\n";
      }
    }
    o << "</g>\n";
  }
  // Axis numbers at 0 and p - 1.
  o << "<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#444\">\n";
  o << "<text x=\"" << cx(0) << "\" y=\"" << margin + side + 14 << "\" text-anchor=\"middle\">0</text>\n";
  o << "<text x=\"" << cx(p - 1) << "\" y=\"" << margin + side + 14 << "\" text-anchor=\"middle\">" << p - 1
    << "</text>\n";
  o << "<text x=\"" << margin - 6 << "\" y=\"" << cy(0) + 4 << "\" text-anchor=\"end\">0</text>\n";
  o << "<text x=\"" << margin - 6 << "\" y=\"" << cy(p - 1) + 4 << "\" text-anchor=\"end\">" << p - 1 << "</text>\n";
  o << "</g>\n";
  const std::uint64_t r = std::max<std::uint64_t>(2, cell / 3);
  o << "<g fill=\"#1f5fa8\">\n";
  for (const Pt& P : points) {
    o << "<circle cx=\"" << cx(P.x.value()) << "\" cy=\"" << cy(P.y.value()) << "\" r=\"" << r << "\"/>\n";
  }
  o << "</g>\n";
  o << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#a11\">\n";
  for (const PlotLabel& l : labels) {
    o << "<text x=\"" << cx(l.point.x.value()) + r + 2 << "\" y=\"" << cy(l.point.y.value()) - r - 1 << "\">"
      << escape(l.text) << "</text>\n";
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

}  // namespace neuberg
