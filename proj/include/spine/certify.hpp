#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spine/io.hpp"

namespace spine {

enum class StageStatus { Pass, Fail, Skipped };
std::string status_name(StageStatus s);

struct Stage {
    std::string name;
    StageStatus status = StageStatus::Skipped;
    std::string detail;
};

struct CertifyOptions {
    bool enumerate = false;
    long max_cosets = 200000;
};

struct CertifyReport {
    long k = 0;
    long l = 0;
    long n = 0;
    long f = 0;
    std::vector<Stage> stages;
    // "spine", "not a spine", "outside theorem scope" or "FAIL".
    std::string verdict;

    bool passed() const;  // no stage failed
    int exit_code() const { return passed() ? 0 : 1; }
    const Stage* stage(const std::string& name) const;
    std::string str() const;
    Json to_json() const;
};

// Throws std::invalid_argument when (k,l,n,f) is not a valid G parameter set.
CertifyReport certify(long k, long l, long n, long f, const CertifyOptions& options = {});

struct SweepRange {
    long k_min = 1, k_max = 1;
    long l_min = 1, l_max = 1;
    long n_min = 4, n_max = 4;
};

std::string sweep_csv_header();
std::string sweep_csv_row(const CertifyReport& r);
// Runs certify on every (k,l,n,f) in range, 0 <= f < n, writing one CSV line
// per point as soon as it is ready. Returns the number of failed points.
long sweep(const SweepRange& range, const CertifyOptions& options, std::ostream& out);

}  // namespace spine
