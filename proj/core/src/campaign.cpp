#include "pcore/campaign.hpp"

#include <algorithm>

#include "pcore/errors.hpp"
#include "pcore/gen_inverse.hpp"
#include "pcore/instance_gen.hpp"
#include "pcore/theorem_suite.hpp"

namespace pcore {

namespace {

Index dim_at(const std::vector<Index>& dims, std::size_t i) {
    if (dims.empty()) {
        throw ParameterError("at least one dimension is required");
    }
    return dims[std::min(i, dims.size() - 1)];
}

Instance from_pair(const MatrixPair& p) {
    Instance out;
    out.matrices = {{"a", p.a}, {"b", p.b}};
    return out;
}

Instance from_blocks(const BlockInstance& m) {
    Instance out;
    out.matrices = {{"A", m.A}, {"B", m.B}, {"C", m.C}, {"D", m.D}};
    out.degenerate = m.degenerate;
    return out;
}

ComplexMatrix triangular(const TriangularInstance& t) {
    return block_matrix(t.a, t.b, zeros(t.d.rows(), t.a.cols()), t.d);
}

} // namespace

const ComplexMatrix& Instance::at(const std::string& key) const {
    const auto it = matrices.find(key);
    if (it == matrices.end()) {
        throw ParameterError("instance is missing matrix '" + key + "'");
    }
    return it->second;
}

const std::vector<std::string>& theorem_symbols(TheoremId id) {
    static const std::vector<std::string> none{};
    static const std::vector<std::string> single{"a"};
    static const std::vector<std::string> pair{"a", "b"};
    static const std::vector<std::string> triple{"a", "b", "d"};
    static const std::vector<std::string> x_only{"x"};
    static const std::vector<std::string> x_p{"x", "p"};
    static const std::vector<std::string> blocks{"A", "B", "C", "D"};
    switch (id) {
    case TheoremId::T1_1: return single;
    case TheoremId::L2_1:
    case TheoremId::L2_2:
    case TheoremId::L2_3:
    case TheoremId::L2_4:
    case TheoremId::T3_1:
    case TheoremId::C3_2: return pair;
    case TheoremId::L2_5a: return triple;
    case TheoremId::L2_5b: return x_only;
    case TheoremId::L2_5p: return x_p;
    case TheoremId::EX3_3: return none;
    default: return blocks;
    }
}

TheoremReport run_check(TheoremId id, const Instance& in, const TolerancePolicy& tol) {
    switch (id) {
    case TheoremId::T1_1: return check_theorem_1_1(in.at("a"), tol);
    case TheoremId::L2_1: return check_lemma_2_1(in.at("a"), in.at("b"), tol);
    case TheoremId::L2_2: return check_lemma_2_2(in.at("a"), in.at("b"), tol);
    case TheoremId::L2_3: return check_lemma_2_3(in.at("a"), in.at("b"), tol);
    case TheoremId::L2_4: return check_lemma_2_4(in.at("a"), in.at("b"), tol);
    case TheoremId::L2_5a: return check_lemma_2_5(in.at("a"), in.at("b"), in.at("d"), tol);
    case TheoremId::L2_5b:
        if (!in.split) {
            throw ParameterError("L2_5b requires a block split");
        }
        return check_lemma_2_5_converse(in.at("x"), *in.split, tol);
    case TheoremId::L2_5p: return check_lemma_2_5_projection(in.at("x"), in.at("p"), tol);
    case TheoremId::T3_1: return check_theorem_3_1(in.at("a"), in.at("b"), tol);
    case TheoremId::C3_2: return check_corollary_3_2(in.at("a"), in.at("b"), tol);
    case TheoremId::EX3_3: return reproduce_example_3_3(tol);
    case TheoremId::T4_1:
        return check_theorem_4_1(in.at("A"), in.at("B"), in.at("C"), in.at("D"), tol);
    case TheoremId::C4_2:
        return check_corollary_4_2(in.at("A"), in.at("B"), in.at("C"), in.at("D"), tol);
    case TheoremId::T4_3:
        return check_theorem_4_3(in.at("A"), in.at("B"), in.at("C"), in.at("D"), tol);
    case TheoremId::C4_4:
        return check_corollary_4_4(in.at("A"), in.at("B"), in.at("C"), in.at("D"), tol);
    case TheoremId::T4_5:
        return check_theorem_4_5(in.at("A"), in.at("B"), in.at("C"), in.at("D"), tol);
    case TheoremId::C4_6:
        return check_corollary_4_6(in.at("A"), in.at("B"), in.at("C"), in.at("D"), tol);
    }
    throw ParameterError("unknown theorem id");
}

Instance generate_instance(TheoremId id, const std::vector<Index>& dims, std::uint64_t seed) {
    const Index n1 = dim_at(dims, 0);
    const Index n2 = dim_at(dims, 1);
    Rng rng(seed);
    switch (id) {
    case TheoremId::T1_1: {
        Instance out;
        out.matrices["a"] = gen_random_index(n1, 3, rng.next_seed());
        return out;
    }
    case TheoremId::L2_1:
    case TheoremId::L2_2:
    case TheoremId::T3_1: return from_pair(gen_commutant_pair(n1, rng.next_seed()));
    case TheoremId::L2_3: return from_pair(gen_annihilating_pair(n1, rng.next_seed()));
    case TheoremId::L2_4: return from_pair(gen_arbitrary_pair(n1, rng.next_seed()));
    case TheoremId::C3_2: {
        const int k = rng.uniform_int(0, static_cast<int>(std::min<Index>(3, n1)));
        const Index r = k == 0 ? n1 : rng.uniform_int(0, static_cast<int>(n1 - k));
        MatrixPair p;
        p.a = gen_star_dmp(n1, r, k, rng.next_seed());
        p.b = sample_star_commutant(p.a, rng);
        return from_pair(p);
    }
    case TheoremId::L2_5a: {
        const TriangularInstance t = gen_lemma_2_5_instance(n1, n2, rng.next_seed());
        Instance out;
        out.matrices = {{"a", t.a}, {"b", t.b}, {"d", t.d}};
        out.degenerate = t.degenerate;
        return out;
    }
    case TheoremId::L2_5b: {
        const TriangularInstance t = gen_lemma_2_5_instance(n1, n2, rng.next_seed());
        Instance out;
        out.matrices["x"] = triangular(t);
        out.split = n1;
        out.degenerate = t.degenerate;
        return out;
    }
    case TheoremId::L2_5p: {
        // Triangular x and p = I ⊕ 0 seen through a random unitary.
        const TriangularInstance t = gen_lemma_2_5_instance(n1, n2, rng.next_seed());
        const ComplexMatrix w = rng.unitary(n1 + n2);
        ComplexMatrix p = zeros(n1 + n2, n1 + n2);
        p.topLeftCorner(n1, n1) = identity(n1);
        Instance out;
        out.matrices["x"] = w * triangular(t) * w.adjoint();
        out.matrices["p"] = w * p * w.adjoint();
        out.degenerate = t.degenerate;
        return out;
    }
    case TheoremId::EX3_3: return Instance{};
    case TheoremId::T4_1:
    case TheoremId::C4_2: return from_blocks(gen_intertwined_4_1(n1, n2, rng.next_seed()));
    case TheoremId::T4_3: return from_blocks(gen_intertwined_4_3(n1, n2, rng.next_seed()));
    case TheoremId::C4_4: return from_blocks(dual(gen_intertwined_4_3(n1, n2, rng.next_seed())));
    case TheoremId::T4_5: return from_blocks(gen_zero_product_4_5(n1, n2, rng.next_seed()));
    case TheoremId::C4_6: return from_blocks(gen_zero_product_4_6(n1, n2, rng.next_seed()));
    }
    throw ParameterError("unknown theorem id");
}

TrialOutcome run_trial(TheoremId id, const std::vector<Index>& dims, std::uint64_t seed,
                       const TolerancePolicy& tol) {
    const Instance instance = generate_instance(id, dims, seed);
    TrialOutcome out;
    out.seed = seed;
    out.report = run_check(id, instance, tol);
    out.degenerate = instance.degenerate;
    return out;
}

Campaign run_campaign(TheoremId id, const std::vector<Index>& dims, int trials,
                      std::uint64_t seed, const TolerancePolicy& tol) {
    if (trials < 1) {
        throw ParameterError("trials must be >= 1, got " + std::to_string(trials));
    }
    tol.validate();
    Campaign c;
    c.summary.trials = trials;
    for (int i = 0; i < trials; ++i) {
        TrialOutcome t = run_trial(id, dims, derive_seed(seed, static_cast<std::uint64_t>(i)), tol);
        switch (t.report.verdict()) {
        case Verdict::pass: ++c.summary.pass; break;
        case Verdict::fail: ++c.summary.fail; break;
        case Verdict::hypotheses_not_met: ++c.summary.hypotheses_not_met; break;
        }
        if (t.degenerate) {
            ++c.summary.degenerate;
        }
        c.outcomes.push_back(std::move(t));
    }
    return c;
}

} // namespace pcore
