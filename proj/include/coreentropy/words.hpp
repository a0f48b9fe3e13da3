#pragma once
// Symbolic itineraries over {0,1}, {0,1,2} and {0,...,q}. Words are plain
// digit strings; the first symbol is the itinerary of the critical value and
// the last one sits at the critical point.

#include <string>
#include <vector>

namespace ce {

using BinaryWord = std::string;
using SimplifiedWord = std::string;
using FullWord = std::string;

// Eventually periodic word: pre followed by period repeated forever.
struct InfiniteWord {
    std::string pre;
    std::string period;

    std::string to_string() const { return pre + "|" + period; }
    static InfiniteWord parse(const std::string& s);
    char at(std::size_t i) const;
};

enum class Order { LT = -1, EQ = 0, GT = 1 };

// Finite words of equal length, compared symbol by symbol.
Order twisted_lex_compare(const BinaryWord& w, const BinaryWord& v);
Order twisted_lex_compare(const InfiniteWord& w, const InfiniteWord& v);
// Compares w^infinity with v^infinity.
Order twisted_lex_compare_periodic(const BinaryWord& w, const BinaryWord& v);

bool is_binary(const std::string& w);
bool is_irreducible(const std::string& w);
bool is_admissible(const BinaryWord& w);

// Completes w_1..w_{n-1} with the symbol at the critical point. The last
// symbol makes the number of 1s even (limit from the side of the main
// cardioid) unless that produces a proper power, in which case it is flipped.
BinaryWord complete_with_convention(const BinaryWord& prefix);

enum class RealizabilityMode { OracleThenCombinatorial, OracleOnly, Combinatorial };
struct RealizabilityPolicy {
    RealizabilityMode mode = RealizabilityMode::OracleThenCombinatorial;
    int oracle_bound = 12;
};
RealizabilityPolicy& realizability_policy();

bool is_realizable_combinatorial(const BinaryWord& w);
bool is_realizable(const BinaryWord& w);

// Leading real root of the real-vein kneading polynomial; 1 for zero entropy.
double binary_growth_rate(const BinaryWord& w);
bool is_minimal(const BinaryWord& w);

SimplifiedWord recode(const BinaryWord& w);
InfiniteWord recode(const InfiniteWord& w);
BinaryWord recode_inverse(const SimplifiedWord& w);
FullWord q_recode(const SimplifiedWord& w, int q);
SimplifiedWord simplify(const FullWord& w);
BinaryWord substitution_D(const BinaryWord& w);

bool satisfies_simplified_grammar(const SimplifiedWord& w);
bool satisfies_full_grammar(const FullWord& w, int q);

enum class EnumMode { All, Minimal };
EnumMode parse_enum_mode(const std::string& s);

// Realizable (or minimal) words of length <= max_period, recoded, ordered by
// (length, string). Minimal mode skips zero-entropy words.
std::vector<SimplifiedWord> enumerate_vein_itineraries(int p, int q, int max_period, EnumMode mode,
                                                       int jobs = 1);
// Realizable binary words of exactly length n.
std::vector<BinaryWord> realizable_words(int n, int jobs = 1);

}  // namespace ce
