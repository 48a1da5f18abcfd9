#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "curvball/fishbowl.hpp"
#include "curvball/surface.hpp"

namespace curvball {

/// A catalog constructor name with its key/value arguments. Entries keep the
/// source positions of key and value so late validation errors point at them.
struct SurfaceSpec {
  struct Entry {
    std::string key;
    std::string value;
    int line = 1;
    int column = 1;     ///< column of the value
    int keyColumn = 1;  ///< column of the key
  };
  std::string type;
  std::vector<Entry> entries;
  int line = 1;
  int column = 1;

  const Entry* find(const std::string& key) const;
};

/// `type` or `type:key=value,key=value`, e.g. `sphere:r=1.5,cx=0.4`.
/// Throws ConfigError (line 1, column of the offending character).
SurfaceSpec parseInlineSpec(const std::string& text);

/// One section named after the constructor followed by `key = value` lines;
/// `#` and `;` start comments:
///
///     [torus]
///     R = 2
///     r = 1
SurfaceSpec parseSpecFile(std::istream& in);
SurfaceSpec loadSpecFile(const std::string& path);

/// Known types and keys (all optional):
///   sphere     r cx cy cz
///   ellipsoid  a b c cx cy cz
///   perturbed  amp f (cos3theta) coeffs (a;b;...) cx cy cz
///   torus      R r
///   tube       R r extent
///   cylinder   r h
///   mainbody
///   fishbowl   plateLength plateGap halfCircleRadius tunnelDelta
/// Unknown types or keys and malformed numbers throw ConfigError; geometric
/// errors from the constructors propagate unchanged.
Surface buildSurface(const SurfaceSpec& spec);

/// Fishbowl parameters from a `fishbowl` spec.
FishbowlParams fishbowlParams(const SurfaceSpec& spec);

}  // namespace curvball
