#ifndef MFC_DATASET_HPP
#define MFC_DATASET_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mfc/errors.hpp"

namespace mfc {

// Point index type. Instances are capped well below 2^32 points, and the
// quadratic baselines materialize tens of millions of edges, so a compact
// index halves edge memory compared to size_t.
using Index = std::uint32_t;

enum class DataKind { vectors, sets, strings, planted };

// Index-table metric used by the planted-pair adversarial instances: one
// chosen pair at distance 1, every other distinct pair at distance `off`.
struct PlantedTable {
    Index n = 0;
    Index a = 0;
    Index b = 0;
    double off = 0.0;
};

// A finite collection of homogeneous points. Only the member matching
// `kind` is populated.
struct Dataset {
    DataKind kind = DataKind::vectors;
    std::vector<std::vector<double>> vectors;
    std::vector<std::vector<std::uint32_t>> sets; // each sorted, duplicate-free
    std::vector<std::u32string> strings;          // unicode code points
    PlantedTable planted;

    Index size() const {
        switch (kind) {
        case DataKind::vectors: return static_cast<Index>(vectors.size());
        case DataKind::sets: return static_cast<Index>(sets.size());
        case DataKind::strings: return static_cast<Index>(strings.size());
        case DataKind::planted: return planted.n;
        }
        return 0;
    }

    // Dimension of vector data; meaningless for other kinds.
    std::size_t dim() const { return vectors.empty() ? 0 : vectors.front().size(); }

    void validate() const {
        const Index n = size();
        if (n < 1) throw InputError("dataset must contain at least one point");
        if (kind == DataKind::vectors) {
            const std::size_t d = dim();
            if (d < 1) throw InputError("vector points must have dimension >= 1");
            for (const auto& v : vectors)
                if (v.size() != d) throw InputError("all vectors must share one dimension");
        } else if (kind == DataKind::sets) {
            for (const auto& s : sets)
                if (!std::is_sorted(s.begin(), s.end()) ||
                    std::adjacent_find(s.begin(), s.end()) != s.end())
                    throw InvariantError("set payloads must be sorted and duplicate-free");
        }
    }
};

// Decodes a UTF-8 byte sequence into code points. Malformed input is an
// input error, not silently replaced.
inline std::u32string decode_utf8(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        const auto b0 = static_cast<unsigned char>(bytes[i]);
        int extra;
        char32_t cp;
        if (b0 < 0x80) {
            extra = 0;
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            extra = 1;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            extra = 2;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            extra = 3;
            cp = b0 & 0x07;
        } else {
            throw InputError("malformed UTF-8 byte at offset " + std::to_string(i));
        }
        if (i + extra >= bytes.size())
            throw InputError("truncated UTF-8 sequence at offset " + std::to_string(i));
        for (int k = 1; k <= extra; ++k) {
            const auto bk = static_cast<unsigned char>(bytes[i + k]);
            if ((bk & 0xC0) != 0x80)
                throw InputError("malformed UTF-8 continuation at offset " +
                                 std::to_string(i + k));
            cp = (cp << 6) | (bk & 0x3F);
        }
        out.push_back(cp);
        i += 1 + extra;
    }
    return out;
}

inline std::string encode_utf8(const std::u32string& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

namespace detail {

inline std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open input file: " + path);
    return in;
}

inline std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

} // namespace detail

// CSV, one point per line, comma-separated decimal reals, uniform arity.
inline Dataset load_vectors_csv(const std::string& path) {
    auto in = detail::open_or_throw(path);
    Dataset ds;
    ds.kind = DataKind::vectors;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::strip_cr(line);
        if (line.empty()) continue;
        std::vector<double> point;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            try {
                std::size_t pos = 0;
                const double x = std::stod(field, &pos);
                while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) ++pos;
                if (pos != field.size()) throw std::invalid_argument(field);
                point.push_back(x);
            } catch (const std::exception&) {
                throw InputError(path + ":" + std::to_string(lineno) +
                                 ": not a decimal real: '" + field + "'");
            }
        }
        if (point.empty())
            throw InputError(path + ":" + std::to_string(lineno) + ": empty point");
        ds.vectors.push_back(std::move(point));
    }
    ds.validate();
    return ds;
}

// Text, one set per line, whitespace-separated non-negative integer ids.
// An empty line is a valid empty set.
inline Dataset load_sets(const std::string& path) {
    auto in = detail::open_or_throw(path);
    Dataset ds;
    ds.kind = DataKind::sets;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::strip_cr(line);
        std::vector<std::uint32_t> ids;
        std::stringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            try {
                std::size_t pos = 0;
                const unsigned long long v = std::stoull(tok, &pos);
                if (pos != tok.size() || v > 0xFFFFFFFFull) throw std::invalid_argument(tok);
                ids.push_back(static_cast<std::uint32_t>(v));
            } catch (const std::exception&) {
                throw InputError(path + ":" + std::to_string(lineno) +
                                 ": not a non-negative integer id: '" + tok + "'");
            }
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        ds.sets.push_back(std::move(ids));
    }
    if (ds.sets.empty()) throw InputError(path + ": no sets found");
    ds.validate();
    return ds;
}

// UTF-8 text, one string per line. An empty line is a valid empty string.
inline Dataset load_strings(const std::string& path) {
    auto in = detail::open_or_throw(path);
    Dataset ds;
    ds.kind = DataKind::strings;
    std::string line;
    while (std::getline(in, line)) {
        ds.strings.push_back(decode_utf8(detail::strip_cr(line)));
    }
    if (ds.strings.empty()) throw InputError(path + ": no strings found");
    ds.validate();
    return ds;
}

} // namespace mfc

#endif
