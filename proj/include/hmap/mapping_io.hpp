#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hmap/harmonic.hpp"

namespace hmap {

/// On-disk form of a mapping: class parameters plus the h and g coefficient
/// lists as [re, im] pairs ascending from power 0.
struct MappingDocument {
  ClassParams params;
  HarmonicMapping mapping;
};

/// Serialize with shortest round-trip decimal doubles, so save/load is
/// bit-exact for finite values.
std::string document_to_json(const MappingDocument& doc);

/// Parse and validate. Throws std::runtime_error with the byte offset on
/// malformed JSON and with the offending field name on schema or
/// normalization violations.
MappingDocument document_from_json(const std::string& text,
                                   bool require_h0 = true);

MappingDocument load_mapping(const std::string& path, bool require_h0 = true);
void save_mapping(const std::string& path, const MappingDocument& doc);

/// Loads a bare coefficient list {"coeffs": [[re, im], ...]} or a full
/// mapping document's h part; used for the hat-convolution factor.
PowerSeries load_series(const std::string& path);

/// CSV rows `r,theta,re_f,im_f,jacobian` over theta = 2*pi*k/samples,
/// ordered by (r, theta). Requires radii in (0,1) and samples >= 16.
void emit_curves(const HarmonicMapping& f, const std::vector<double>& radii,
                 int samples, std::ostream& out);

}  // namespace hmap
