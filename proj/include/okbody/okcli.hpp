#pragma once

// File formats, job execution and plotting behind the okbody command.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "okbody/convbody.hpp"
#include "okbody/surfacezar.hpp"

namespace okb::cli {

using json = nlohmann::json;

inline constexpr const char *kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

// Series files ---------------------------------------------------------------

/// {"ambient_dim": d, "divisor_degree": m, "generators": [{"degree": k,
/// "forms": [[{"exp": [...], "num": p, "den": q}, ...], ...]}]}.
/// Errors name the offending field, e.g. generators[0].forms[2][1].exp.
GradedSeries parse_series(const json &doc);
GradedSeries parse_series_text(std::string_view text);
GradedSeries parse_series_file(const std::string &path);
/// Only generated series can be written back.
json serialize_series(const GradedSeries &s);

// Surface files --------------------------------------------------------------

struct SurfaceInput {
  SurfaceLattice lattice;
  RatVector d;
  RatVector c;
  std::map<std::size_t, int> point_multiplicities;
};

SurfaceInput parse_surface(const json &doc);
SurfaceInput parse_surface_file(const std::string &path);

// Jobs -----------------------------------------------------------------------

struct FlagSpec {
  enum class Kind { identity, matrix, seed };
  Kind kind = Kind::identity;
  RatMatrix matrix;
  std::uint64_t seed = 0;

  Flag make(std::size_t nvars) const;
  json to_json() const;
};

/// "1,0,0;0,1,0;0,0,1" with rational entries.
RatMatrix parse_matrix(const std::string &text);

struct JobSpec {
  std::string command;
  std::string input;
  int truncation = 6;
  FlagSpec flag;
  std::optional<std::string> svg_path;
  /// slice
  std::optional<BigRational> t;
  /// generic-test: seeds 1..flags
  int flags = 5;
  /// fujita
  std::vector<int> p{1, 2, 4};
  /// filtered-dims: all sigma with |sigma| <= sigma_max
  int sigma_max = 4;
};

const std::vector<std::string> &commands();

struct ResultEnvelope {
  json doc;
  /// Stable, pretty-printed; identical jobs give identical bytes.
  std::string text() const { return doc.dump(2) + "\n"; }
};

ResultEnvelope run(const JobSpec &job);

/// 2 input, 3 unsupported, 4 internal invariant.
int exit_code(const std::exception &e);

std::string sha256_hex(std::string_view data);
std::string read_file(const std::string &path);

// Plots ----------------------------------------------------------------------

/// Bodies in R^2 (drawn directly) or R^3 (oblique projection of the edge
/// graph). Throws UnsupportedError otherwise.
std::string polytope_svg(const RationalPolytope &p, const std::string &title);
std::string surface_svg(const SurfaceBody &body);
void write_file(const std::string &path, const std::string &content);

json to_json(const RationalPolytope &p);

} // namespace okb::cli
