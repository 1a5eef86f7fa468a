#pragma once

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>

namespace linecong {

using Json = nlohmann::ordered_json;

// Reports are emitted as JSON (default) or as flat key<TAB>value lines.
// Arrays join with commas; nested objects flatten with dotted keys. Key order
// follows insertion order, so reruns with the same inputs are byte-identical.
inline void write_tsv(std::ostream& out, const Json& j, const std::string& prefix = "") {
    auto scalar = [](const Json& v) {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    for (const auto& [key, value] : j.items()) {
        std::string full = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            write_tsv(out, value, full);
        } else if (value.is_array()) {
            std::ostringstream os;
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (i) os << ",";
                if (value[i].is_object()) {
                    os << value[i].dump();
                } else {
                    os << scalar(value[i]);
                }
            }
            out << full << "\t" << os.str() << "\n";
        } else {
            out << full << "\t" << scalar(value) << "\n";
        }
    }
}

inline void emit_report(std::ostream& out, const Json& j, const std::string& format) {
    if (format == "tsv") {
        write_tsv(out, j);
    } else {
        out << j.dump(2) << "\n";
    }
}

}  // namespace linecong
