// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "augkaf/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace augkaf {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, const std::string& key) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto* end = text.data() + text.size();
    auto res = std::from_chars(text.data(), end, v);
    if (text.empty() || res.ec != std::errc() || res.ptr != end)
        throw ConfigError("'" + key + "': expected a number, got '" + std::string(text) + "'");
    return v;
}

std::size_t parse_size(std::string_view text, const std::string& key) {
    text = trim(text);
    std::size_t v = 0;
    const auto* end = text.data() + text.size();
    auto res = std::from_chars(text.data(), end, v);
    if (text.empty() || res.ec != std::errc() || res.ptr != end)
        throw ConfigError("'" + key + "': expected a non-negative integer, got '" + std::string(text) + "'");
    return v;
}

bool parse_bool(std::string_view text, const std::string& key) {
    text = trim(text);
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw ConfigError("'" + key + "': expected true or false, got '" + std::string(text) + "'");
}

std::vector<cplx> parse_complex_list(std::string_view text) {
    std::vector<cplx> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_complex(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

ChannelKind parse_channel_kind(std::string_view text) {
    if (text == "soft") return ChannelKind::Soft;
    if (text == "strong") return ChannelKind::Strong;
    if (text == "custom") return ChannelKind::Custom;
    throw ConfigError("unknown channel '" + std::string(text) + "' (soft, strong or custom)");
}

void set_algorithm_field(AlgorithmConfig& a, const std::string& field, std::string_view value,
                         const std::string& key) {
    if (field == "type") a.kind = parse_algorithm_kind(std::string(trim(value)));
    else if (field == "mu") a.mu = parse_double(value, key);
    else if (field == "sigma") a.sigma = parse_double(value, key);
    else if (field == "delta1") a.delta1 = parse_double(value, key);
    else if (field == "delta2") a.delta2 = parse_double(value, key);
    else if (field == "epsilon") a.epsilon = parse_double(value, key);
    else if (field == "normalized") a.normalized = parse_bool(value, key);
    else if (field == "hidden") a.hidden = parse_size(value, key);
    else if (field == "linear_output") a.linear_output = parse_bool(value, key);
    else if (field == "init_scale") a.init_scale = parse_double(value, key);
    else if (field == "capacity") {
        if (trim(value) == "none") a.capacity.reset();
        else a.capacity = parse_size(value, key);
    } else
        throw ConfigError("unknown algorithm field '" + key + "'");
}

AlgorithmConfig kernel_algo(std::string name, AlgorithmKind kind, double mu, double sigma) {
    AlgorithmConfig a;
    a.name = std::move(name);
    a.kind = kind;
    a.mu = mu;
    a.sigma = sigma;
    a.delta1 = 0.1;
    a.delta2 = 0.2;
    return a;
}

AlgorithmConfig plain_algo(std::string name, AlgorithmKind kind, double mu) {
    AlgorithmConfig a;
    a.name = std::move(name);
    a.kind = kind;
    a.mu = mu;
    return a;
}

void apply_scale(ExperimentConfig& c, PresetScale scale) {
    if (scale == PresetScale::Fast) {
        c.trials = 20;
        c.samples = 3000;
    } else {
        c.trials = 100;
        c.samples = 5000;
    }
}

} // namespace

cplx parse_complex(std::string_view text) {
    std::string compact;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') compact.push_back(ch);
    const std::string key = "complex value";
    if (compact.empty()) throw ConfigError("empty complex value");
    if (compact.back() != 'i') return {parse_double(compact, key), 0.0};

    const std::string_view body(compact.data(), compact.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [&](std::string_view part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return parse_double(part, key);
    };
    if (split == std::string_view::npos) return {0.0, imag_of(body)};
    return {parse_double(body.substr(0, split), key), imag_of(body.substr(split))};
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_complex(cplx v) {
    std::string out = format_double(v.real());
    const double im = v.imag();
    out += (std::signbit(im) ? "-" : "+");
    out += format_double(std::abs(im));
    out += 'i';
    return out;
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    cfg.algorithms.clear();
    std::map<std::string, std::size_t> index;
    std::optional<std::vector<cplx>> taps;
    std::optional<cplx> nl2, nl3;
    bool channel_seen = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key(trim(view.substr(0, eq)));
        const std::string_view value = trim(view.substr(eq + 1));
        if (value.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty value for '" + key + "'");

        if (key == "format") {
            if (parse_size(value, key) != static_cast<std::size_t>(kConfigFormatVersion))
                throw ConfigError("unsupported config format version '" + std::string(value) + "'");
        } else if (key == "channel") {
            cfg.channel_kind = parse_channel_kind(value);
            channel_seen = true;
        } else if (key == "channel.taps") {
            taps = parse_complex_list(value);
        } else if (key == "channel.nl2") {
            nl2 = parse_complex(value);
        } else if (key == "channel.nl3") {
            nl3 = parse_complex(value);
        } else if (key == "rho") {
            cfg.rho = parse_double(value, key);
        } else if (key == "snr_db") {
            cfg.snr_db = parse_double(value, key);
        } else if (key == "filter_length") {
            cfg.filter_length = parse_size(value, key);
        } else if (key == "delay") {
            cfg.delay = parse_size(value, key);
        } else if (key == "samples") {
            cfg.samples = parse_size(value, key);
        } else if (key == "trials") {
            cfg.trials = parse_size(value, key);
        } else if (key == "seed") {
            cfg.base_seed = parse_size(value, key);
        } else if (key == "steady_fraction") {
            cfg.steady_fraction = parse_double(value, key);
        } else if (key.rfind("algorithm.", 0) == 0) {
            const std::string rest = key.substr(10);
            const auto dot = rest.rfind('.');
            if (dot == std::string::npos || dot == 0)
                throw ConfigError("line " + std::to_string(line_no) + ": expected algorithm.<name>.<field>");
            const std::string name = rest.substr(0, dot);
            const std::string field = rest.substr(dot + 1);
            auto [it, inserted] = index.try_emplace(name, cfg.algorithms.size());
            if (inserted) {
                cfg.algorithms.emplace_back();
                cfg.algorithms.back().name = name;
            }
            set_algorithm_field(cfg.algorithms[it->second], field, value, key);
        } else {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }

    if (!channel_seen) throw ConfigError("missing 'channel'");
    switch (cfg.channel_kind) {
    case ChannelKind::Soft: cfg.channel = ChannelSpec::soft(); break;
    case ChannelKind::Strong: cfg.channel = ChannelSpec::strong(); break;
    case ChannelKind::Custom:
        if (!taps) throw ConfigError("custom channel requires 'channel.taps'");
        cfg.channel = ChannelSpec{{}, {0.0, 0.0}, {0.0, 0.0}};
        break;
    }
    if (taps) cfg.channel.taps = *taps;
    if (nl2) cfg.channel.nl2 = *nl2;
    if (nl3) cfg.channel.nl3 = *nl3;
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    try {
        return parse_config(in);
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::string dump_config(const ExperimentConfig& c) {
    std::ostringstream os;
    os << "format = " << kConfigFormatVersion << '\n';
    os << "channel = " << to_string(c.channel_kind) << '\n';
    os << "channel.taps = ";
    for (std::size_t j = 0; j < c.channel.taps.size(); ++j) os << (j ? ", " : "") << format_complex(c.channel.taps[j]);
    os << '\n';
    os << "channel.nl2 = " << format_complex(c.channel.nl2) << '\n';
    os << "channel.nl3 = " << format_complex(c.channel.nl3) << '\n';
    os << "rho = " << format_double(c.rho) << '\n';
    os << "snr_db = " << format_double(c.snr_db) << '\n';
    os << "filter_length = " << c.filter_length << '\n';
    os << "delay = " << c.delay << '\n';
    os << "samples = " << c.samples << '\n';
    os << "trials = " << c.trials << '\n';
    os << "seed = " << c.base_seed << '\n';
    os << "steady_fraction = " << format_double(c.steady_fraction) << '\n';
    for (const auto& a : c.algorithms) {
        const std::string p = "algorithm." + a.name + ".";
        os << '\n';
        os << p << "type = " << to_string(a.kind) << '\n';
        os << p << "mu = " << format_double(a.mu) << '\n';
        if (is_kernel_algorithm(a.kind)) {
            os << p << "sigma = " << format_double(a.sigma) << '\n';
            os << p << "delta1 = " << format_double(a.delta1) << '\n';
            os << p << "delta2 = " << format_double(a.delta2) << '\n';
            os << p << "capacity = " << (a.capacity ? std::to_string(*a.capacity) : std::string("none")) << '\n';
        }
        if (a.kind == AlgorithmKind::Mlp) {
            os << p << "hidden = " << a.hidden << '\n';
            os << p << "linear_output = " << (a.linear_output ? "true" : "false") << '\n';
        }
        if (a.kind == AlgorithmKind::Mlp || a.kind == AlgorithmKind::Cngd) {
            os << p << "init_scale = " << format_double(a.init_scale) << '\n';
        } else {
            os << p << "epsilon = " << format_double(a.epsilon) << '\n';
            os << p << "normalized = " << (a.normalized ? "true" : "false") << '\n';
        }
    }
    return os.str();
}

ExperimentConfig paper_fig1_config(PresetScale scale, bool circular) {
    ExperimentConfig c;
    c.channel_kind = ChannelKind::Soft;
    c.channel = ChannelSpec::soft();
    c.rho = circular ? std::numbers::sqrt2 / 2.0 : 0.1;
    c.snr_db = 15.0;
    c.filter_length = 5;
    c.delay = 2;
    apply_scale(c, scale);
    c.algorithms = {
        kernel_algo("NCKLMS2", AlgorithmKind::Ncklms2, 1.0 / 8.0, 10.0),
        kernel_algo("NACKLMS", AlgorithmKind::Nacklms, 1.0 / 8.0, 10.0),
        plain_algo("NCLMS", AlgorithmKind::Nclms, 1.0 / 16.0),
        plain_algo("NACLMS", AlgorithmKind::Naclms, 1.0 / 16.0),
    };
    return c;
}

ExperimentConfig paper_fig2_config(PresetScale scale, bool circular) {
    ExperimentConfig c;
    c.channel_kind = ChannelKind::Strong;
    c.channel = ChannelSpec::strong();
    c.rho = circular ? std::numbers::sqrt2 / 2.0 : 0.1;
    c.snr_db = 15.0;
    c.filter_length = 5;
    c.delay = 2;
    apply_scale(c, scale);
    c.algorithms = {
        kernel_algo("NCKLMS2", AlgorithmKind::Ncklms2, 1.0 / 8.0, 15.0),
        kernel_algo("NACKLMS", AlgorithmKind::Nacklms, 1.0 / 8.0, 15.0),
        plain_algo("MLP", AlgorithmKind::Mlp, 0.0003),
        plain_algo("CNGD", AlgorithmKind::Cngd, 0.0005),
    };
    return c;
}

} // namespace augkaf
