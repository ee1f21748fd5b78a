#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace dendrimag {

/// Outcome of one identity check. Exact checks store per-degree residual
/// support sizes (all zero on success); sampled checks store a case count
/// and the number of failing samples.
struct CheckResult {
    std::string name;
    bool informational = false;
    bool passed = true;
    std::size_t cases = 0;
    std::vector<std::size_t> degree_residuals;
    std::string detail;
};

class VerificationReport {
public:
    VerificationReport() = default;
    explicit VerificationReport(std::string title) : title_(std::move(title)) {}

    /// Hard check over per-degree residuals.
    CheckResult& add_degrees(std::string name, std::vector<std::size_t> residuals)
    {
        CheckResult c;
        c.name = std::move(name);
        c.cases = residuals.size();
        for (auto r : residuals) c.passed = c.passed && r == 0;
        c.degree_residuals = std::move(residuals);
        checks_.push_back(std::move(c));
        return checks_.back();
    }

    /// Hard check over samples; `failures` counts samples with nonzero residual.
    CheckResult& add_samples(std::string name, std::size_t cases, std::size_t failures, std::string detail = {})
    {
        CheckResult c;
        c.name = std::move(name);
        c.cases = cases;
        c.passed = failures == 0;
        c.detail = failures == 0 ? std::move(detail) : std::to_string(failures) + " failing; " + detail;
        checks_.push_back(std::move(c));
        return checks_.back();
    }

    CheckResult& add_flag(std::string name, bool ok, std::string detail = {})
    {
        CheckResult c;
        c.name = std::move(name);
        c.cases = 1;
        c.passed = ok;
        c.detail = std::move(detail);
        checks_.push_back(std::move(c));
        return checks_.back();
    }

    /// Reported but never fails the report.
    CheckResult& add_info(std::string name, bool matches, std::string detail)
    {
        auto& c = add_flag(std::move(name), matches, std::move(detail));
        c.informational = true;
        return c;
    }

    void merge(const VerificationReport& other)
    {
        for (auto c : other.checks_) {
            if (!other.title_.empty()) c.name = other.title_ + ": " + c.name;
            checks_.push_back(std::move(c));
        }
    }

    [[nodiscard]] bool passed() const
    {
        for (const auto& c : checks_)
            if (!c.informational && !c.passed) return false;
        return true;
    }
    [[nodiscard]] const std::vector<CheckResult>& checks() const { return checks_; }
    [[nodiscard]] const std::string& title() const { return title_; }

    /// One line per check: "[PASS] name (residuals 0 0 0)".
    [[nodiscard]] std::string to_text() const
    {
        std::ostringstream os;
        for (const auto& c : checks_) {
            const char* tag = c.informational ? (c.passed ? "[INFO match]" : "[INFO differ]")
                                              : (c.passed ? "[PASS]" : "[FAIL]");
            os << tag << " ";
            if (!title_.empty()) os << title_ << ": ";
            os << c.name;
            if (!c.degree_residuals.empty()) {
                os << " (residual terms per degree:";
                for (auto r : c.degree_residuals) os << ' ' << r;
                os << ")";
            } else if (c.cases > 1) {
                os << " (" << c.cases << " cases)";
            }
            if (!c.detail.empty()) os << " -- " << c.detail;
            os << "\n";
        }
        return os.str();
    }

private:
    std::string title_;
    std::vector<CheckResult> checks_;
};

} // namespace dendrimag
