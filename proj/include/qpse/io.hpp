#pragma once

#include <string>
#include <vector>

#include "qpse/grid.hpp"
#include "qpse/qcurve.hpp"

namespace qpse {

// %.12g rendering used for every CSV number so that identical runs produce
// byte-identical files.
std::string format_g12(double v);

// 1D: index,x,re,im  /  index,x,rho
// 3D: index,x,y,z,re,im  /  index,x,y,z,rho
void write_amplitude_csv(const SampledAmplitude& a, const std::string& path);
void write_density_csv(const Density& d, const std::string& path);

// grid spec, representation, time; schema_version "1"
void write_amplitude_meta(const SampledAmplitude& a, const std::string& path);

SampledAmplitude read_amplitude(const std::string& csv_path, const std::string& meta_path);

// columns t,s_r,s_k,s_total (plus extra columns appended by callers)
void write_series_csv(const EntropySeries& series, const std::vector<double>& s_r,
                      const std::vector<double>& s_k, const std::string& path);

// reads any CSV with a header containing t and s_total columns
EntropySeries read_series_csv(const std::string& path);

}  // namespace qpse
