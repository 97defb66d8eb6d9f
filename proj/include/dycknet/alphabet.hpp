#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dycknet/errors.hpp"

namespace dycknet {

// Ordered set of distinct symbol names. Words are sequences of indices into
// this order; one-hot input positions and weight-matrix columns follow it.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const { return symbols_.size(); }
    const std::string& name(std::size_t i) const;
    int index_of(const std::string& name) const; // UnknownSymbolError
    const std::vector<std::string>& symbols() const { return symbols_; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.symbols_ == b.symbols_;
    }

private:
    std::vector<std::string> symbols_;
    std::map<std::string, int> index_;
};

using Word = std::vector<int>;

// Canonical Dyck alphabet of 2n symbols: (1 (2 ... (n )1 )2 ... )n.
Alphabet dyck_alphabet(int n);

// Whitespace-separated tokens -> symbol indices.
Word parse_word(const Alphabet& alphabet, const std::string& tokens);
std::string format_word(const Alphabet& alphabet, const Word& word);

} // namespace dycknet
