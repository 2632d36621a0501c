#pragma once

#include <string>
#include <vector>

namespace nlab {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

/// Flat list of named verification outcomes. Check names mirror the result
/// labels they certify, so a report doubles as an index of what was verified.
class CheckList {
public:
    void pass(std::string name, std::string detail = "") {
        results_.push_back({std::move(name), CheckStatus::Pass, std::move(detail)});
    }
    void fail(std::string name, std::string detail = "") {
        results_.push_back({std::move(name), CheckStatus::Fail, std::move(detail)});
    }
    void skip(std::string name, std::string detail = "") {
        results_.push_back({std::move(name), CheckStatus::Skip, std::move(detail)});
    }
    void require(bool ok, const std::string& name, const std::string& detail_on_fail = "") {
        if (ok)
            pass(name);
        else
            fail(name, detail_on_fail);
    }

    void merge(const CheckList& other) {
        results_.insert(results_.end(), other.results_.begin(), other.results_.end());
    }

    bool all_passed() const {
        for (const auto& r : results_)
            if (r.status == CheckStatus::Fail) return false;
        return true;
    }
    int fail_count() const {
        int c = 0;
        for (const auto& r : results_)
            if (r.status == CheckStatus::Fail) ++c;
        return c;
    }

    const std::vector<CheckResult>& results() const { return results_; }

private:
    std::vector<CheckResult> results_;
};

inline std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

}  // namespace nlab
