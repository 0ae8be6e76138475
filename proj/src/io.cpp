#include "geneo/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace geneo::io {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  return cells;
}

// Reads rows of exactly two cells; the first non-empty line is the header.
std::vector<std::pair<std::string, std::string>> read_two_columns(std::istream& in, const char* what) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  bool header = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto cells = split_row(line);
    if (cells.size() != 2)
      throw FormatError(std::string(what) + ": expected 2 columns on line " + std::to_string(line_no));
    rows.emplace_back(std::move(cells[0]), std::move(cells[1]));
  }
  return rows;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  const std::string t = trim(text);
  if (t == "inf" || t == "+inf" || t == "Inf" || t == "infinity") return kInfinity;
  if (t == "-inf" || t == "-Inf") return -kInfinity;
  if (t == "nan") return std::nan("");
  double v = 0.0;
  const char* first = t.data();
  if (!t.empty() && t.front() == '+') ++first;
  const auto res = std::from_chars(first, t.data() + t.size(), v);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size())
    throw FormatError("not a number: '" + t + "'");
  return v;
}

void write_signal_csv(std::ostream& out, const Signal& s) {
  out << "x,value\n";
  for (std::size_t i = 0; i < s.size(); ++i) out << format_double(s.x(i)) << ',' << format_double(s[i]) << '\n';
}

Signal read_signal_csv(std::istream& in, EdgePolicy edge) {
  const auto rows = read_two_columns(in, "signal csv");
  if (rows.size() < 2) throw FormatError("signal csv: need at least two samples");
  std::vector<double> xs, vs;
  for (const auto& [x, v] : rows) {
    xs.push_back(parse_double(x));
    vs.push_back(parse_double(v));
  }
  const double step = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  if (!(step > 0.0)) throw FormatError("signal csv: x must be strictly increasing");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double expected = xs.front() + static_cast<double>(i) * step;
    if (std::abs(xs[i] - expected) > 1e-9 * step)
      throw FormatError("signal csv: non-uniform grid at row " + std::to_string(i + 1));
  }
  return Signal(xs.front(), step, std::move(vs), edge);
}

void write_diagram_csv(std::ostream& out, const Diagram& d) {
  out << "birth,death\n";
  const Diagram s = d.sorted();
  for (const auto& p : s.essential) out << format_double(p.birth) << ",inf\n";
  for (const auto& p : s.finite) out << format_double(p.birth) << ',' << format_double(p.death) << '\n';
}

Diagram read_diagram_csv(std::istream& in) {
  Diagram d;
  for (const auto& [b, e] : read_two_columns(in, "diagram csv")) {
    const PersistencePair p{parse_double(b), parse_double(e)};
    if (!std::isfinite(p.birth) || std::isnan(p.death)) throw FormatError("diagram csv: invalid point");
    if (p.birth > p.death) throw FormatError("diagram csv: birth > death");
    (p.essential() ? d.essential : d.finite).push_back(p);
  }
  return d;
}

void write_witness_csv(std::ostream& out, const Diagram& a, const Diagram& b, const MatchResult& m) {
  out << "kind,first_birth,first_death,second_birth,second_death,cost\n";
  for (const MatchedPair& pair : m.witness) {
    const auto& pa = pair.essential ? a.essential : a.finite;
    const auto& pb = pair.essential ? b.essential : b.finite;
    const char* kind = pair.essential ? "essential" : (pair.first && pair.second ? "point" : "diagonal");
    out << kind << ',';
    if (pair.first) {
      out << format_double(pa[*pair.first].birth) << ',' << format_double(pa[*pair.first].death);
    } else {
      out << "diag,diag";
    }
    out << ',';
    if (pair.second) {
      out << format_double(pb[*pair.second].birth) << ',' << format_double(pb[*pair.second].death);
    } else {
      out << "diag,diag";
    }
    out << ',' << format_double(pair.cost) << '\n';
  }
}

std::string noise_to_json(const NoiseSpec& spec) {
  nlohmann::json j;
  j["sigma"] = spec.sigma();
  j["bumps"] = nlohmann::json::array();
  for (const Bump& bump : spec.bumps()) j["bumps"].push_back({{"a", bump.a}, {"b", bump.b}, {"c", bump.c}});
  return j.dump(2);
}

NoiseSpec noise_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<Bump> bumps;
    for (const auto& item : j.at("bumps")) {
      bumps.push_back({item.at("a").get<double>(), item.at("b").get<double>(), item.at("c").get<double>()});
    }
    return NoiseSpec(std::move(bumps), j.value("sigma", kDefaultSigma));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("noise json: ") + e.what());
  }
}

void write_svg(std::ostream& out, const std::vector<PlotSeries>& series, const std::string& title) {
  constexpr double kWidth = 800, kHeight = 400, kMargin = 40;
  double x_lo = kInfinity, x_hi = -kInfinity, y_lo = kInfinity, y_hi = -kInfinity;
  for (const auto& s : series) {
    if (s.signal == nullptr) continue;
    x_lo = std::min(x_lo, s.signal->x_min());
    x_hi = std::max(x_hi, s.signal->x_max());
    for (double v : s.signal->values()) {
      y_lo = std::min(y_lo, v);
      y_hi = std::max(y_hi, v);
    }
  }
  if (!(x_hi > x_lo)) x_hi = x_lo + 1.0;
  if (!(y_hi > y_lo)) y_hi = y_lo + 1.0;
  const auto px = [&](double x) { return kMargin + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin); };
  const auto py = [&](double y) { return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kMargin << "\" y=\"20\" font-size=\"14\">" << title << "</text>\n";
  // axes
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin
      << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\""
      << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  if (y_lo < 0.0 && y_hi > 0.0) {
    out << "<line x1=\"" << kMargin << "\" y1=\"" << py(0.0) << "\" x2=\"" << kWidth - kMargin << "\" y2=\""
        << py(0.0) << "\" stroke=\"#bbb\" stroke-dasharray=\"4\"/>\n";
  }
  out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - 10 << "\" font-size=\"11\">x: [" << format_double(x_lo)
      << ", " << format_double(x_hi) << "]  y: [" << format_double(y_lo) << ", " << format_double(y_hi)
      << "]</text>\n";

  int legend_row = 0;
  for (const auto& s : series) {
    if (s.signal == nullptr) continue;
    // Thin out very long signals; the plot is for inspection only.
    const std::size_t stride = std::max<std::size_t>(1, s.signal->size() / 4000);
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < s.signal->size(); i += stride) out << px(s.signal->x(i)) << ',' << py((*s.signal)[i]) << ' ';
    out << "\"/>\n";
    out << "<text x=\"" << kWidth - 200 << "\" y=\"" << 20 + 15 * legend_row++ << "\" font-size=\"12\" fill=\""
        << s.color << "\">" << s.label << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace geneo::io
