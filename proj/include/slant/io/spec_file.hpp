#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "slant/errors.hpp"
#include "slant/frame.hpp"
#include "slant/surface.hpp"

namespace slant::io {

/// Input document does not follow the surface-spec schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

struct LoadedSurface {
  RuledSurfaceSpec surface;
  bool sampled = false;          // jets come from finite differences of interpolated samples
  nlohmann::ordered_json source;  // the document as read
};

/// Builds a surface from a spec document:
///   {"kind":"catalog","name":...,"params":{...}}
///   {"kind":"prescribed_kappa","profile":{"type":...},"s1_range":[lo,hi],"alpha":...,"step":...}
///   {"kind":"sampled","u":[...],"f":[[x,y,z],...],"q":[[x,y,z],...]}
/// An optional "expected" block is read back into RuledSurfaceSpec::expected.
LoadedSurface surface_from_json(const nlohmann::ordered_json& doc);

/// Throws IoError when the file cannot be read and SchemaError when it is not valid JSON.
LoadedSurface read_surface_file(const std::filesystem::path& path);

/// Minimum number of rows in a sampled spec.
inline constexpr std::size_t kMinSampledRows = 16;

/// Surface through sampled base points and directors. Both curves are
/// interpolated by C² quintic Hermite pieces (the director renormalized) and
/// differentiated with fd_jet at step 1e-3·(u range).
RuledSurfaceSpec sampled_surface(std::vector<double> u, std::vector<Vec3> f, std::vector<Vec3> q);

/// Sampled spec document of `surface` on `grid`, carrying its expected invariants.
nlohmann::ordered_json sampled_spec_json(const RuledSurfaceSpec& surface, const SampleGrid& grid);

nlohmann::ordered_json expected_json(const ExpectedInvariants& expected);

}  // namespace slant::io
