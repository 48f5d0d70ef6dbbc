#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "spine/presentation.hpp"

namespace spine {

enum class Strategy {
    Hlt,
    Felsch,
    // HLT first; if it hits the cap, start over with Felsch.
    HltThenFelsch,
};

struct EnumerationOptions {
    long max_cosets = 200000;
    Strategy strategy = Strategy::HltThenFelsch;
    // Receives one line per definition, deduction and coincidence.
    std::function<void(const std::string&)> trace;
};

// SPINE_MAX_COSETS when set to a positive integer, else 200000.
long default_max_cosets();
EnumerationOptions default_options();

enum class EnumerationStatus { Finite, Exceeded };

struct EnumerationResult {
    EnumerationStatus status = EnumerationStatus::Exceeded;
    long order = 0;  // meaningful when finite
    long max_live = 0;
    long total_defined = 0;
    Strategy strategy = Strategy::Hlt;  // the pass that produced this result

    bool finite() const { return status == EnumerationStatus::Finite; }
    std::string str() const;
};

std::string strategy_name(Strategy s);

// Todd-Coxeter enumeration of the cosets of the trivial subgroup. Column 2g
// is generator g, column 2g+1 its inverse. Cosets are scanned in creation
// order and relators in the order given.
class CosetTable {
public:
    CosetTable(int generators, std::vector<Word> relators, EnumerationOptions options = {});

    EnumerationResult run();

    int columns() const { return 2 * gens_; }
    long rows() const { return static_cast<long>(parent_.size()); }
    // -1 when undefined. After a finite run the table holds exactly the live
    // cosets, renumbered in creation order.
    int entry(int coset, int column) const
    {
        return table_[static_cast<std::size_t>(coset) * columns() + column];
    }
    static int column(const Letter& a) { return 2 * a.gen + (a.sign < 0 ? 1 : 0); }

    // Every entry defined, entries mutually inverse, each relator trivial at
    // each coset.
    bool is_closed() const;

private:
    int& at(int coset, int column) { return table_[static_cast<std::size_t>(coset) * columns() + column]; }
    bool alive(long c) const { return parent_[c] == c; }
    int rep(int c);
    void merge(int a, int b);
    void coincidence(int a, int b);
    void set_entry(int c, int x, int d);
    bool define(int coset, int column);
    void scan_and_fill(int coset, const std::vector<int>& rel);
    void scan(int coset, const std::vector<int>& rel);
    void process_deductions();
    void compact(long& cursor);
    void note(const std::string& line) const;
    void reset();
    EnumerationResult run_hlt();
    EnumerationResult run_felsch();
    EnumerationResult finish();

    int gens_;
    std::vector<std::vector<int>> rels_;
    std::vector<std::vector<std::vector<int>>> conjugates_;  // by first column
    EnumerationOptions opts_;
    std::vector<int> table_;
    std::vector<int> parent_;
    std::vector<int> queue_;
    std::vector<std::pair<int, int>> deductions_;
    bool track_deductions_ = false;
    long live_ = 0;
    long max_live_ = 0;
    long total_ = 0;
    bool exceeded_ = false;
};

EnumerationResult coset_enumerate(const std::vector<Word>& relators, int generators,
                                  const EnumerationOptions& options = default_options());
EnumerationResult order_of(const CyclicPresentation& p,
                           const EnumerationOptions& options = default_options());
EnumerationResult order_of(const TwoGeneratorPresentation& e,
                           const EnumerationOptions& options = default_options());

enum class OrderComparison { Equal, Different, Inconclusive };

struct OrderIndependence {
    OrderComparison verdict = OrderComparison::Inconclusive;
    EnumerationResult first;
    EnumerationResult second;

    bool passed() const { return verdict == OrderComparison::Equal; }
};

OrderIndependence verify_order_independence(int k, int l, int n, int f1, int f2,
                                            long max_cosets);

}  // namespace spine
