#include "gic/channel_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "gic/errors.hpp"

namespace gic {

namespace {

using njson = nlohmann::json;

double as_number(const njson& j, const std::string& what) {
    if (!j.is_number()) throw ValidationError(what + " must be a number");
    return j.get<double>();
}

std::vector<std::vector<double>> as_matrix(const njson& j, int n, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ValidationError(what + " must be an n x n array");
    std::vector<std::vector<double>> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const njson& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ValidationError(what + " row " + std::to_string(i + 1) +
                                  " must have n entries");
        for (const njson& v : row)
            m[static_cast<std::size_t>(i)].push_back(as_number(v, what + " entry"));
    }
    return m;
}

std::vector<double> as_vector(const njson& j, int n, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ValidationError(what + " must be an array of n entries");
    std::vector<double> v;
    for (const njson& x : j) v.push_back(as_number(x, what + " entry"));
    return v;
}

NormalizedChannel channel_from_json(const njson& j) {
    if (!j.is_object()) throw ValidationError("channel description must be a JSON object");
    const bool raw_form =
        j.contains("gains") || j.contains("noise_variance") || j.contains("power_caps");
    const bool normalized_form = j.contains("a") || j.contains("pbar");
    if (raw_form && normalized_form)
        throw ValidationError("channel file mixes the raw form (gains/noise_variance/"
                              "power_caps) with the normalized form (a/pbar)");
    if (!raw_form && !normalized_form)
        throw ValidationError("channel file has neither the raw form (gains/"
                              "noise_variance/power_caps) nor the normalized form (a/pbar)");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ValidationError("channel file needs an integer field \"n\"");
    const int n = j["n"].get<int>();
    if (n < 2) throw ValidationError("channel needs at least 2 users");

    if (raw_form) {
        RawChannel raw;
        raw.n = n;
        if (!j.contains("gains") || !j.contains("noise_variance") || !j.contains("power_caps"))
            throw ValidationError("raw channel form needs gains, noise_variance and power_caps");
        raw.gains = as_matrix(j["gains"], n, "gains");
        raw.noise_variance = as_number(j["noise_variance"], "noise_variance");
        raw.power_caps = as_vector(j["power_caps"], n, "power_caps");
        return normalize(raw);
    }
    if (!j.contains("a") || !j.contains("pbar"))
        throw ValidationError("normalized channel form needs both a and pbar");
    return NormalizedChannel(as_matrix(j["a"], n, "a"), as_vector(j["pbar"], n, "pbar"));
}

} // namespace

NormalizedChannel channel_from_json_text(const std::string& text) {
    njson j;
    try {
        j = njson::parse(text);
    } catch (const njson::exception& e) {
        throw ValidationError(std::string("channel file is not valid JSON: ") + e.what());
    }
    return channel_from_json(j);
}

NormalizedChannel load_channel(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return channel_from_json_text(buf.str());
}

NormalizedChannel load_channel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open channel file: " + path);
    return load_channel(in);
}

} // namespace gic
