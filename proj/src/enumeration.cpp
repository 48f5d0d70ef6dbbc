#include "spine/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spine {

long default_max_cosets()
{
    if (const char* env = std::getenv("SPINE_MAX_COSETS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return 200000;
}

EnumerationOptions default_options()
{
    EnumerationOptions o;
    o.max_cosets = default_max_cosets();
    return o;
}

std::string strategy_name(Strategy s)
{
    switch (s) {
    case Strategy::Hlt:
        return "hlt";
    case Strategy::Felsch:
        return "felsch";
    case Strategy::HltThenFelsch:
        return "hlt+felsch";
    }
    return "?";
}

std::string EnumerationResult::str() const
{
    std::ostringstream out;
    if (finite())
        out << order;
    else
        out << "EXCEEDED";
    out << " (" << strategy_name(strategy) << ", max live " << max_live << ", total defined "
        << total_defined << ')';
    return out.str();
}

CosetTable::CosetTable(int generators, std::vector<Word> relators, EnumerationOptions options)
    : gens_(generators), opts_(std::move(options))
{
    if (generators < 1)
        throw std::invalid_argument("need at least one generator");
    if (opts_.max_cosets < 1)
        throw std::invalid_argument("max_cosets must be positive");
    conjugates_.assign(2 * generators, {});
    std::set<std::vector<int>> seen;
    for (const auto& w : relators) {
        if (w.rank() != generators)
            throw std::invalid_argument("relator rank differs from generator count");
        if (!is_freely_reduced(w))
            throw std::invalid_argument("relator is not freely reduced: " + format_word(w));
        if (w.empty())
            continue;
        std::vector<int> cols;
        for (const auto& a : w.letters())
            cols.push_back(column(a));
        rels_.push_back(cols);

        Word c = cyclic_reduce(w);
        for (const Word& base : {c, inverse(c)}) {
            for (std::size_t k = 0; k < base.size(); ++k) {
                Word r = rotate(base, k);
                std::vector<int> rc;
                for (const auto& a : r.letters())
                    rc.push_back(column(a));
                if (seen.insert(rc).second)
                    conjugates_[rc[0]].push_back(std::move(rc));
            }
        }
    }
}

void CosetTable::note(const std::string& line) const
{
    if (opts_.trace)
        opts_.trace(line);
}

int CosetTable::rep(int c)
{
    int r = c;
    while (parent_[r] != r)
        r = parent_[r];
    while (parent_[c] != r) {
        int next = parent_[c];
        parent_[c] = r;
        c = next;
    }
    return r;
}

void CosetTable::merge(int a, int b)
{
    a = rep(a);
    b = rep(b);
    if (a == b)
        return;
    if (b < a)
        std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
    --live_;
}

void CosetTable::set_entry(int c, int x, int d)
{
    at(c, x) = d;
    at(d, x ^ 1) = c;
    if (track_deductions_)
        deductions_.push_back({c, x});
}

void CosetTable::coincidence(int a, int b)
{
    note("coincidence " + std::to_string(a) + " " + std::to_string(b));
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
        int g = queue_[qi];
        for (int x = 0; x < columns(); ++x) {
            int d = at(g, x);
            if (d < 0)
                continue;
            at(d, x ^ 1) = -1;
            int mu = rep(g), nu = rep(d);
            if (at(mu, x) >= 0)
                merge(nu, at(mu, x));
            else if (at(nu, x ^ 1) >= 0)
                merge(mu, at(nu, x ^ 1));
            else
                set_entry(mu, x, nu);
        }
    }
}

bool CosetTable::define(int coset, int col)
{
    if (live_ >= opts_.max_cosets) {
        exceeded_ = true;
        return false;
    }
    int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + columns(), -1);
    set_entry(coset, col, c);
    ++live_;
    ++total_;
    max_live_ = std::max(max_live_, live_);
    note("define " + std::to_string(c) + " = " + std::to_string(coset) + "." + std::to_string(col));
    return true;
}

void CosetTable::scan_and_fill(int coset, const std::vector<int>& rel)
{
    int f = coset, b = coset;
    long i = 0, j = static_cast<long>(rel.size()) - 1;
    while (true) {
        while (i <= j && at(f, rel[i]) >= 0)
            f = at(f, rel[i++]);
        if (i > j) {
            if (f != b)
                coincidence(f, b);
            return;
        }
        while (j >= i && at(b, rel[j] ^ 1) >= 0)
            b = at(b, rel[j--] ^ 1);
        if (j < i) {
            coincidence(f, b);
            return;
        }
        if (i == j) {
            note("deduce " + std::to_string(f) + "." + std::to_string(rel[i]) + " = " + std::to_string(b));
            set_entry(f, rel[i], b);
            return;
        }
        if (!define(f, rel[i]))
            return;
    }
}

void CosetTable::scan(int coset, const std::vector<int>& rel)
{
    int f = coset, b = coset;
    long i = 0, j = static_cast<long>(rel.size()) - 1;
    while (i <= j && at(f, rel[i]) >= 0)
        f = at(f, rel[i++]);
    if (i > j) {
        if (f != b)
            coincidence(f, b);
        return;
    }
    while (j >= i && at(b, rel[j] ^ 1) >= 0)
        b = at(b, rel[j--] ^ 1);
    if (j < i) {
        coincidence(f, b);
    } else if (i == j) {
        note("deduce " + std::to_string(f) + "." + std::to_string(rel[i]) + " = " + std::to_string(b));
        set_entry(f, rel[i], b);
    }
}

void CosetTable::process_deductions()
{
    while (!deductions_.empty()) {
        auto [c, x] = deductions_.back();
        deductions_.pop_back();
        if (!alive(c))
            continue;
        for (const auto& r : conjugates_[x]) {
            scan(c, r);
            if (!alive(c))
                break;
        }
        if (!alive(c))
            continue;
        int d = at(c, x);
        if (d < 0 || !alive(d))
            continue;
        for (const auto& r : conjugates_[x ^ 1]) {
            scan(d, r);
            if (!alive(d))
                break;
        }
    }
}

void CosetTable::compact(long& cursor)
{
    const long total = rows();
    std::vector<int> renum(total, -1);
    int next = 0;
    for (long c = 0; c < total; ++c)
        if (alive(c))
            renum[c] = next++;
    std::vector<int> fresh(static_cast<std::size_t>(next) * columns(), -1);
    for (long c = 0; c < total; ++c) {
        if (renum[c] < 0)
            continue;
        for (int x = 0; x < columns(); ++x) {
            int d = at(static_cast<int>(c), x);
            fresh[static_cast<std::size_t>(renum[c]) * columns() + x] = d < 0 ? -1 : renum[rep(d)];
        }
    }
    long live_before = 0;
    for (long c = 0; c < cursor; ++c)
        if (renum[c] >= 0)
            ++live_before;
    cursor = live_before;
    table_ = std::move(fresh);
    parent_.resize(next);
    for (int c = 0; c < next; ++c)
        parent_[c] = c;
}

void CosetTable::reset()
{
    table_.assign(columns(), -1);
    parent_.assign(1, 0);
    queue_.clear();
    deductions_.clear();
    live_ = max_live_ = total_ = 1;
    exceeded_ = false;
}

EnumerationResult CosetTable::finish()
{
    EnumerationResult res;
    res.max_live = max_live_;
    res.total_defined = total_;
    if (exceeded_)
        return res;
    long end = rows();
    compact(end);
    res.status = EnumerationStatus::Finite;
    res.order = live_;
    return res;
}

EnumerationResult CosetTable::run_hlt()
{
    reset();
    track_deductions_ = false;
    for (long a = 0; a < rows() && !exceeded_; ++a) {
        if (rows() > 4 * opts_.max_cosets + 1024 && rows() > 2 * live_)
            compact(a);
        for (const auto& rel : rels_) {
            if (!alive(a))
                break;
            scan_and_fill(static_cast<int>(a), rel);
            if (exceeded_)
                break;
        }
        for (int x = 0; x < columns() && !exceeded_ && alive(a); ++x)
            if (at(static_cast<int>(a), x) < 0)
                define(static_cast<int>(a), x);
    }
    auto r = finish();
    r.strategy = Strategy::Hlt;
    return r;
}

EnumerationResult CosetTable::run_felsch()
{
    reset();
    track_deductions_ = true;
    for (const auto& rel : rels_)
        scan(0, rel);
    process_deductions();
    for (long a = 0; a < rows() && !exceeded_; ++a) {
        if (rows() > 4 * opts_.max_cosets + 1024 && rows() > 2 * live_)
            compact(a);
        for (int x = 0; x < columns() && !exceeded_; ++x) {
            if (!alive(a))
                break;
            if (at(static_cast<int>(a), x) >= 0)
                continue;
            if (define(static_cast<int>(a), x))
                process_deductions();
        }
    }
    track_deductions_ = false;
    auto r = finish();
    r.strategy = Strategy::Felsch;
    return r;
}

EnumerationResult CosetTable::run()
{
    switch (opts_.strategy) {
    case Strategy::Hlt:
        return run_hlt();
    case Strategy::Felsch:
        return run_felsch();
    case Strategy::HltThenFelsch: {
        auto r = run_hlt();
        if (r.finite())
            return r;
        note("hlt exceeded; restarting with felsch");
        auto f = run_felsch();
        f.total_defined += r.total_defined;
        f.max_live = std::max(f.max_live, r.max_live);
        return f;
    }
    }
    throw std::logic_error("unknown strategy");
}

bool CosetTable::is_closed() const
{
    const int n = static_cast<int>(parent_.size());
    for (int c = 0; c < n; ++c) {
        if (parent_[c] != c)
            return false;
        for (int x = 0; x < columns(); ++x) {
            int d = entry(c, x);
            if (d < 0 || d >= n || entry(d, x ^ 1) != c)
                return false;
        }
        for (const auto& rel : rels_) {
            int e = c;
            for (int x : rel)
                e = entry(e, x);
            if (e != c)
                return false;
        }
    }
    return true;
}

EnumerationResult coset_enumerate(const std::vector<Word>& relators, int generators,
                                  const EnumerationOptions& options)
{
    CosetTable t(generators, relators, options);
    return t.run();
}

EnumerationResult order_of(const CyclicPresentation& p, const EnumerationOptions& options)
{
    std::vector<Word> rs;
    for (const auto& w : relators(p))
        rs.push_back(free_reduce(w));
    return coset_enumerate(rs, p.rank(), options);
}

EnumerationResult order_of(const TwoGeneratorPresentation& e, const EnumerationOptions& options)
{
    std::vector<Word> rs;
    for (const auto& w : e.relators)
        rs.push_back(free_reduce(w));
    return coset_enumerate(rs, 2, options);
}

OrderIndependence verify_order_independence(int k, int l, int n, int f1, int f2, long max_cosets)
{
    FamilySpec::G(k, l, n, f1).validate();
    FamilySpec::G(k, l, n, f2).validate();
    if ((static_cast<long>(f1) * k) % n != 0 || (static_cast<long>(f2) * k) % n != 0)
        throw std::invalid_argument("order independence needs f1*k = f2*k = 0 mod n");
    EnumerationOptions opts;
    opts.max_cosets = max_cosets;
    OrderIndependence r;
    r.first = order_of(build_family(FamilySpec::G(k, l, n, f1)), opts);
    r.second = order_of(build_family(FamilySpec::G(k, l, n, f2)), opts);
    if (!r.first.finite() || !r.second.finite())
        r.verdict = OrderComparison::Inconclusive;
    else
        r.verdict = r.first.order == r.second.order ? OrderComparison::Equal : OrderComparison::Different;
    return r;
}

}  // namespace spine
