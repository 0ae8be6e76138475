#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "geneo/matching.hpp"
#include "geneo/noise.hpp"
#include "geneo/persistence.hpp"
#include "geneo/signal.hpp"

namespace geneo::io {

/// Thrown on malformed input files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal text that reads back to the same double; "inf"/"-inf"/"nan" otherwise.
std::string format_double(double v);
double parse_double(const std::string& text);

/// Two-column CSV with header `x,value`.
void write_signal_csv(std::ostream& out, const Signal& s);
/// Infers x_min and step; rejects grids whose nodes deviate from uniform
/// spacing by more than 1e-9 * step.
Signal read_signal_csv(std::istream& in, EdgePolicy edge = EdgePolicy::ZeroExtend);

/// CSV with header `birth,death`; essential points carry death `inf`.
void write_diagram_csv(std::ostream& out, const Diagram& d);
Diagram read_diagram_csv(std::istream& in);

/// Witness pairing as CSV: kind,first_birth,first_death,second_birth,second_death,cost.
void write_witness_csv(std::ostream& out, const Diagram& a, const Diagram& b, const MatchResult& m);

/// JSON object {"sigma": .., "bumps": [{"a": .., "b": .., "c": ..}, ...]}.
std::string noise_to_json(const NoiseSpec& spec);
NoiseSpec noise_from_json(const std::string& text);

struct PlotSeries {
  std::string label;
  const Signal* signal = nullptr;
  std::string color;
};

/// Line plot of several signals on shared axes.
void write_svg(std::ostream& out, const std::vector<PlotSeries>& series, const std::string& title);

}  // namespace geneo::io
