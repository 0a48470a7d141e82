#include "qpse/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qpse {

std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

// strtod instead of std::stod: subnormal magnitudes in packet tails must
// parse rather than raise out_of_range
double parse_double(const std::string& field) {
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str()) throw std::runtime_error("bad numeric field: " + field);
    return v;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

void node_coords(const GridSpec& g, std::size_t idx, Representation rep, double* xyz) {
    const int n = g.points_per_axis;
    auto coord = [&](int i) {
        return rep == Representation::position ? g.coordinate(i) : g.frequency(i);
    };
    if (g.dim == 1) {
        xyz[0] = coord(static_cast<int>(idx));
    } else if (g.dim == 2) {
        xyz[0] = coord(static_cast<int>(idx) / n);
        xyz[1] = coord(static_cast<int>(idx) % n);
    } else {
        xyz[0] = coord(static_cast<int>(idx / (static_cast<std::size_t>(n) * n)));
        xyz[1] = coord(static_cast<int>(idx / n) % n);
        xyz[2] = coord(static_cast<int>(idx) % n);
    }
}

}  // namespace

void write_amplitude_csv(const SampledAmplitude& a, const std::string& path) {
    auto out = open_out(path);
    const int dim = a.grid.dim;
    out << (dim == 1 ? "index,x,re,im" : dim == 2 ? "index,x,y,re,im" : "index,x,y,z,re,im")
        << "\n";
    double xyz[3];
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        node_coords(a.grid, i, a.representation, xyz);
        out << i;
        for (int d = 0; d < dim; ++d) out << ',' << format_g12(xyz[d]);
        out << ',' << format_g12(a.values[i].real()) << ',' << format_g12(a.values[i].imag())
            << "\n";
    }
}

void write_density_csv(const Density& d, const std::string& path) {
    auto out = open_out(path);
    const int dim = d.grid.dim;
    out << (dim == 1 ? "index,x,rho" : dim == 2 ? "index,x,y,rho" : "index,x,y,z,rho") << "\n";
    double xyz[3];
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        node_coords(d.grid, i, d.representation, xyz);
        out << i;
        for (int k = 0; k < dim; ++k) out << ',' << format_g12(xyz[k]);
        out << ',' << format_g12(d.values[i]) << "\n";
    }
}

void write_amplitude_meta(const SampledAmplitude& a, const std::string& path) {
    nlohmann::json j;
    j["schema_version"] = "1";
    j["dim"] = a.grid.dim;
    j["points_per_axis"] = a.grid.points_per_axis;
    j["extent_per_axis"] = a.grid.extent_per_axis;
    j["representation"] = a.representation == Representation::position ? "position" : "frequency";
    j["time"] = a.time;
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

SampledAmplitude read_amplitude(const std::string& csv_path, const std::string& meta_path) {
    std::ifstream meta(meta_path);
    if (!meta) throw std::runtime_error("cannot open: " + meta_path);
    nlohmann::json j;
    meta >> j;
    SampledAmplitude a;
    a.grid = GridSpec(j.at("dim").get<int>(), j.at("points_per_axis").get<int>(),
                      j.at("extent_per_axis").get<double>());
    a.representation = j.at("representation").get<std::string>() == "frequency"
                           ? Representation::frequency
                           : Representation::position;
    a.time = j.value("time", 0.0);

    std::ifstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot open: " + csv_path);
    std::string line;
    std::getline(csv, line);  // header
    a.values.reserve(a.grid.node_count());
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() < 4) throw std::runtime_error("bad amplitude CSV row: " + line);
        const double re = parse_double(fields[fields.size() - 2]);
        const double im = parse_double(fields[fields.size() - 1]);
        a.values.emplace_back(re, im);
    }
    if (a.values.size() != a.grid.node_count())
        throw std::runtime_error("amplitude CSV row count does not match grid");
    return a;
}

void write_series_csv(const EntropySeries& series, const std::vector<double>& s_r,
                      const std::vector<double>& s_k, const std::string& path) {
    if (s_r.size() != series.times.size() || s_k.size() != series.times.size())
        throw std::invalid_argument("write_series_csv: column length mismatch");
    auto out = open_out(path);
    out << "t,s_r,s_k,s_total\n";
    for (std::size_t i = 0; i < series.times.size(); ++i)
        out << format_g12(series.times[i]) << ',' << format_g12(s_r[i]) << ','
            << format_g12(s_k[i]) << ',' << format_g12(series.values[i]) << "\n";
}

EntropySeries read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty series CSV: " + path);

    std::vector<std::string> cols;
    {
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, ',')) cols.push_back(c);
    }
    int t_col = -1, s_col = -1;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] == "t") t_col = static_cast<int>(i);
        if (cols[i] == "s_total") s_col = static_cast<int>(i);
    }
    if (t_col < 0 || s_col < 0)
        throw std::runtime_error("series CSV needs t and s_total columns: " + path);

    EntropySeries s;
    s.meta = path;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        s.times.push_back(parse_double(fields.at(t_col)));
        s.values.push_back(parse_double(fields.at(s_col)));
    }
    return s;
}

}  // namespace qpse
