#include "dycknet/alphabet.hpp"

#include <sstream>

namespace dycknet {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw DomainError("empty alphabet");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].empty()) throw DomainError("empty symbol name");
        if (!index_.emplace(symbols_[i], static_cast<int>(i)).second)
            throw DomainError("duplicate symbol '" + symbols_[i] + "'");
    }
}

const std::string& Alphabet::name(std::size_t i) const {
    if (i >= symbols_.size()) throw UnknownSymbolError("symbol index out of range");
    return symbols_[i];
}

int Alphabet::index_of(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw UnknownSymbolError("unknown symbol '" + name + "'");
    return it->second;
}

Alphabet dyck_alphabet(int n) {
    if (n < 1) throw DomainError("Dyck alphabet needs n >= 1");
    std::vector<std::string> syms;
    syms.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) syms.push_back("(" + std::to_string(i));
    for (int i = 1; i <= n; ++i) syms.push_back(")" + std::to_string(i));
    return Alphabet(std::move(syms));
}

Word parse_word(const Alphabet& alphabet, const std::string& tokens) {
    Word w;
    std::istringstream in(tokens);
    std::string tok;
    while (in >> tok) w.push_back(alphabet.index_of(tok));
    return w;
}

std::string format_word(const Alphabet& alphabet, const Word& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += alphabet.name(static_cast<std::size_t>(word[i]));
    }
    return out;
}

} // namespace dycknet
