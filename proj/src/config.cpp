#include "oreext/config.hpp"

#include "oreext/errors.hpp"
#include "oreext/parser.hpp"

#include <fstream>
#include <sstream>

namespace oreext {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

AlgebraPtr AlgebraConfig::build() const {
    if (field != "Q" && field != "rationals")
        throw Error(ErrorKind::InvalidArgument, "unsupported field '" + field + "' (only Q is available)");
    if (sigma_y.empty()) throw Error(ErrorKind::InvalidArgument, "algebra config is missing sigma_y");
    BasePoly sigma = parse_base(sigma_y);
    BasePoly delta = parse_base(delta_y);
    return std::make_shared<const OreAlgebra>(std::move(sigma), std::move(delta));
}

AlgebraConfig parse_algebra_config(std::string_view text) {
    AlgebraConfig config;
    std::size_t line_no = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        const auto end = std::min(text.find('\n', offset), text.size());
        std::string_view line = text.substr(offset, end - offset);
        offset = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorKind::Parse, "config line " + std::to_string(line_no) + ": expected key=value");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key == "field") {
            config.field = value;
        } else if (key == "sigma_y") {
            config.sigma_y = value;
        } else if (key == "delta_y") {
            config.delta_y = value;
        } else {
            throw Error(ErrorKind::Parse, "config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    return config;
}

AlgebraConfig load_algebra_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open algebra config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_config(buf.str());
}

} // namespace oreext
