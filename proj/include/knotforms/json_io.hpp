#pragma once

#include <string>
#include <vector>

// Single-header nlohmann/json from vendor/.
#include "json.hpp"

#include "knotforms/infection.hpp"
#include "knotforms/seifert.hpp"
#include "knotforms/signatures.hpp"

namespace knotforms {

using json = nlohmann::json;

// Matrix format: {"size": 2, "rows": [[1,-1],[0,1]]}.
json matrix_to_json(const SeifertMatrix& v);
SeifertMatrix matrix_from_json(const json& j);  // ParseError / InvalidSeifertMatrix

json interval_to_json(const CertifiedInterval& iv);
json profile_to_json(const SignatureProfile& p);
json verdict_to_json(const Verdict& v);

// Named Seifert matrices (optionally marked fibered) plus a seed for the
// randomized suites.
struct Corpus {
    struct Entry {
        std::string name;
        SeifertMatrix matrix;
        bool fibered = false;
    };
    std::vector<Entry> entries;
    std::uint64_t seed = 0;

    const Entry* find(const std::string& name) const;
};

Corpus corpus_from_json(const json& j);
Corpus load_corpus(const std::string& path);  // ParseError with position info
json corpus_to_json(const Corpus& c);

}  // namespace knotforms
