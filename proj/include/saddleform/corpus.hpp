#pragma once

#include <string>
#include <vector>

#include "saddleform/analysis.hpp"

namespace saddleform {

struct CorpusCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Outcome of one built-in worked example: a handful of exact identities and
/// classification facts that pin the library against hand-computable ground
/// truth.
struct CorpusResult {
    std::string id;
    std::string description;
    std::vector<CorpusCheck> checks;

    bool pass() const;
    /// One line per check, prefixed "ok" or "FAIL".
    std::string str() const;
};

const std::vector<std::string>& corpus_ids();

/// Run one example by id ("ex0".."ex3"); throws UnknownExample otherwise.
CorpusResult corpus_check(const std::string& id);

} // namespace saddleform
