#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "chordlab/analysis.hpp"
#include "chordlab/lqec.hpp"
#include "chordlab/phasespace.hpp"

namespace chordlab {

/// Key/value lines written as "# key: value" at the top of every text output.
/// Always carries the config hash, the conventions and the code version; no
/// timestamps, so identical runs give identical files.
struct OutputHeader {
  std::string config_hash = "none";
  std::vector<std::pair<std::string, std::string>> fields;

  OutputHeader& add(std::string key, std::string value);
  std::string render() const;
};

std::string code_version();
std::string conventions();
/// 8 hex digits (crc32) of a byte string.
std::string content_hash(const std::string& bytes);
/// %.17g
std::string exact(double x);

/// u, v, re, im rows.
void write_section_csv(const std::filesystem::path& path, const ChordSection& s,
                       const OutputHeader& header);
/// Versioned binary via the artifact container: an (nu + 1) x (nv + 1)
/// table whose first row holds the v axis and first column the u axis.
void write_section_binary(const std::filesystem::path& path, const ChordSection& s);
ChordSection read_section_binary(const std::filesystem::path& path);

enum class HeatmapField { modulus, real, imaginary };

/// 8-bit raster of the section (u along x, v upward) with optional nodal
/// lines (real black, imaginary white) and blind spots (red). Writes a
/// "<path>.txt" sidecar with the header, the axis ranges and the colour
/// scale; the header is also stored as a PNG text chunk.
void write_heatmap(const std::filesystem::path& path, const ChordSection& s, HeatmapField field,
                   const std::vector<const NodalLineSet*>& lines = {},
                   const BlindSpotSet* spots = nullptr, const OutputHeader& header = {});

void write_nodal_lines_csv(const std::filesystem::path& path, const NodalLineSet& lines,
                           const OutputHeader& header);
void write_spots_csv(const std::filesystem::path& path, const BlindSpotSet& spots,
                     const OutputHeader& header);
void write_curve_csv(const std::filesystem::path& path, const CorrelationCurve& curve,
                     const OutputHeader& header);
void write_sample_csv(const std::filesystem::path& path, const ShellSample& sample,
                      const OutputHeader& header);

/// Writes text atomically enough for our purposes: parent directories are
/// created and the file replaced.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace chordlab
