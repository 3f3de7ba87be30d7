#pragma once

#include "ghmod/delta.hpp"
#include "ghmod/hook.hpp"
#include "ghmod/linalg.hpp"
#include "ghmod/poly.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ghmod {

enum class Family { HX, HY, XY, XBar, YBar };

struct Generator {
    Family family;
    int degree = 0;
    std::vector<int> vars;  // 0-based indices
    Polynomial poly;
    std::string label() const;
};

struct GeneratorSet {
    int K = 0;
    int L = 0;
    std::vector<Generator> generators;
};

GeneratorSet generators(int K, int L);
bool annihilates(const Polynomial& P, const DeltaPolynomial& delta);

// A relation P = f_1 * f_2 * ... kept factored so it can be applied one factor at a time.
struct PropositionInstance {
    int which = 0;         // 1..4
    bool x_alphabet = false;  // mirrored statement (propositions 1 and 2)
    std::string description;
    std::vector<Polynomial> factors;
    Polynomial product() const;
};

bool annihilates(const PropositionInstance& inst, const DeltaPolynomial& delta);
std::vector<PropositionInstance> proposition_instances(int n, int K, int L, int which, int limit = 6);

enum class Anomaly { ValidDrawing, Case1a, Case1b, Case1c, Case1d, Case2a, Case2b, NullOperator };
std::string to_string(Anomaly a);

struct AnomalyClass {
    Anomaly kind = Anomaly::ValidDrawing;
    int place = 0;  // 1-based guilty place, 0 when none
};

AnomalyClass classify_diagram(const Monomial& op, int K, int L);

// How a step was justified.
enum class Rule { CaseProposition, PropositionSearch, DeltaOracle };
std::string to_string(Rule r);

struct ReductionStep {
    Rule rule = Rule::CaseProposition;
    AnomalyClass anomaly;
    std::string relation;
    std::vector<std::pair<mpq_class, Monomial>> terms;  // op is equivalent to sum c_i m_i, each m_i < op
};

class NotAnAnomaly : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ReductionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NormalFormStats {
    size_t steps = 0;
    std::map<Rule, size_t> by_rule;
};

// Rewriting engine for one hook. With a delta attached, a last-resort step expresses an
// operator through smaller drawing operators by exact linear algebra on the images.
class Rewriter {
public:
    Rewriter(int K, int L, const DeltaPolynomial* delta = nullptr);
    ~Rewriter();
    Rewriter(const Rewriter&) = delete;
    Rewriter& operator=(const Rewriter&) = delete;

    int K() const;
    int L() const;
    const std::vector<HookDrawing>& drawings() const;

    ReductionStep reduce_step(const Monomial& op);
    std::map<HookDrawing, mpq_class> normal_form(const Monomial& op);
    const NormalFormStats& stats() const;
    size_t budget() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

ReductionStep reduce_step(const Monomial& op, int K, int L);
std::map<HookDrawing, mpq_class> normal_form(const Monomial& op, int K, int L, const DeltaPolynomial& delta);

struct QuotientTable {
    GradedTable table;  // keyed by operator bidegree (x-degree, y-degree)
    size_t total = 0;
    bool shell_zero = true;
};

QuotientTable quotient_hilbert(int K, int L, const RankOptions& opts = {}, int limit = 6);

}  // namespace ghmod
