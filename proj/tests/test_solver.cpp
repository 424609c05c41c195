#include "arckit/solver/adapters.hpp"
#include "arckit/solver/ensemble.hpp"
#include "arckit/solver/presets.hpp"
#include "arckit/solver/ttt.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace arckit;
using namespace arckit::solver;
using runtime::CandidateProgram;

namespace {

Grid map_cells(const Grid& g, int w, int h, const std::function<Color(int, int)>& f) {
    Grid out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) out.set(x, y, f(x, y));
    (void)g;
    return out;
}

Grid rot180(const Grid& g) {
    return map_cells(g, g.width(), g.height(), [&](int x, int y) { return g.at(g.width() - 1 - x, g.height() - 1 - y); });
}
Grid flip_lr(const Grid& g) {
    return map_cells(g, g.width(), g.height(), [&](int x, int y) { return g.at(g.width() - 1 - x, y); });
}
Grid flip_ud(const Grid& g) {
    return map_cells(g, g.width(), g.height(), [&](int x, int y) { return g.at(x, g.height() - 1 - y); });
}
Grid transpose(const Grid& g) {
    return map_cells(g, g.height(), g.width(), [&](int x, int y) { return g.at(y, x); });
}

using Fn = std::function<Grid(const Grid&)>;

CandidateProgram program(const std::string& name, Fn f) {
    runtime::NativeProgram p;
    p.transform = std::move(f);
    return CandidateProgram::from_native("test:" + name, std::move(p));
}

Task make_task(const std::string& id, Rng& rng, const Fn& rule, int n_train = 3, int n_test = 1) {
    Task t;
    t.id = id;
    std::vector<Grid> outs;
    for (int i = 0; i < n_train + n_test; ++i) {
        Grid in = oracle::random_grid(rng, 6, 6, 10, 2);
        if (i < n_train) t.train.push_back({in, rule(in)});
        else {
            t.test_inputs.push_back(in);
            outs.push_back(rule(in));
        }
    }
    t.test_outputs = outs;
    return t;
}

bool any_correct(const Prediction& p, const Task& t, std::size_t k) {
    for (std::size_t i = 0; i < p.attempts.size() && i < k; ++i)
        if (p.attempts[i] == *t.test_outputs) return true;
    return false;
}

Attempt single(Grid g) { return Attempt{std::move(g)}; }

std::vector<FilteredProgram> from_tally(const std::vector<std::pair<Grid, int>>& tally) {
    std::vector<FilteredProgram> F;
    for (const auto& [g, n] : tally)
        for (int i = 0; i < n; ++i) F.push_back({F.size(), single(g)});
    return F;
}

Grid solid(int w, Color c) { return Grid(w, 1, c); }

// Candidate set whose top entry commutes with transposition.
class EquivariantPredictor : public TransductionPredictor {
public:
    int calls = 0;
    std::vector<BeamCandidate> predict(const Task& task) override {
        ++calls;
        const Grid& x = task.test_inputs.at(0);
        return {{rot180(x), -0.2}, {flip_lr(x), -0.9}, {flip_ud(x), -1.4}};
    }
};

} // namespace

// ---- induction filter ----

TEST(InductionFilter, DefinitionCases) {
    Rng rng(1);
    Task t = make_task("t", rng, rot180);
    // Fits only the first two train pairs.
    int calls = 0;
    auto partial = program("partial", [&](const Grid& g) {
        return ++calls == 3 ? g : rot180(g);
    });
    auto r = induction_filter(t, {program("right", rot180), partial, program("id", [](const Grid& g) { return g; })});
    ASSERT_EQ(r.members.size(), 1u);
    EXPECT_EQ(r.members[0].index, 0u);
    EXPECT_EQ(r.members[0].test_outputs, *t.test_outputs);
    EXPECT_EQ(r.failed_train, 2);
}

TEST(InductionFilter, MixedBatchMatchesDirectExecution) {
    Rng rng(2);
    Task t = make_task("mixed", rng, rot180);
    const Grid test_in = t.test_inputs[0];
    std::vector<std::pair<std::string, Fn>> behaviors = {
        {"rot180", rot180},
        {"flip_then_flip", [](const Grid& g) { return flip_ud(flip_lr(g)); }},
        {"flip_lr", flip_lr},
        {"flip_ud", flip_ud},
        {"transpose", transpose},
        {"identity", [](const Grid& g) { return g; }},
        {"crash_on_test", [&](const Grid& g) -> Grid {
             if (g == test_in) throw std::runtime_error("boom");
             return rot180(g);
         }},
        {"wrong_on_test", [&](const Grid& g) { return g == test_in ? g : rot180(g); }},
        {"crash_always", [](const Grid&) -> Grid { throw std::runtime_error("x"); }},
        {"oversize", [](const Grid&) { return Grid(31, 1); }},
    };
    std::vector<CandidateProgram> programs;
    std::vector<Fn> fns;
    for (int rep = 0; rep < 2; ++rep)
        for (const auto& [name, f] : behaviors) {
            programs.push_back(program(name + std::to_string(rep), f));
            fns.push_back(f);
        }
    ASSERT_EQ(programs.size(), 20u);

    // Oracle: call each function directly.
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; i < fns.size(); ++i) {
        bool ok = true;
        try {
            for (const auto& p : t.train) {
                Grid out = fns[i](p.input);
                ok = ok && out == p.output;
            }
            if (ok) {
                Grid out = fns[i](test_in);
                ok = out.is_task_grid();
            }
        } catch (...) {
            ok = false;
        }
        if (ok) expected.push_back(i);
    }
    auto r = induction_filter(t, programs, {}, 2);
    std::vector<std::size_t> got;
    for (const auto& m : r.members) got.push_back(m.index);
    EXPECT_EQ(got, expected);
    EXPECT_EQ(got.size(), 6u);  // rot180, flip_then_flip, wrong_on_test, twice each
    EXPECT_EQ(r.failed_test, 2);
}

// ---- selection ----

TEST(Selection, SingleOutput) {
    auto F = from_tally({{solid(2, Color::Red), 3}});
    Rng rng(0);
    auto p = select_uniform(F, 2, rng);
    ASSERT_EQ(p.attempts.size(), 1u);
    EXPECT_EQ(p.attempts[0], single(solid(2, Color::Red)));
}

TEST(Selection, UniformIsWeightedByPrograms) {
    const Grid A = solid(1, Color::Blue), B = solid(1, Color::Green);
    auto F = from_tally({{A, 2}, {B, 1}});
    Rng rng(123);
    int first_a = 0;
    const int N = 10000;
    for (int i = 0; i < N; ++i) {
        auto p = select_uniform(F, 2, rng);
        ASSERT_EQ(p.attempts.size(), 2u);
        EXPECT_NE(p.attempts[0], p.attempts[1]);
        first_a += p.attempts[0] == single(A);
    }
    EXPECT_NEAR(static_cast<double>(first_a) / N, 2.0 / 3.0, 0.02);
}

TEST(Selection, UniformCapsAtK) {
    auto F = from_tally({{solid(1, Color::Blue), 1}, {solid(1, Color::Red), 1}, {solid(1, Color::Gray), 1}});
    Rng rng(4);
    EXPECT_EQ(select_uniform(F, 2, rng).attempts.size(), 2u);
    EXPECT_THROW(select_uniform({}, 2, rng), std::invalid_argument);
    EXPECT_THROW(majority_vote({}, 2), std::invalid_argument);
}

TEST(Selection, MajorityOrder) {
    const Grid A = solid(2, Color::Blue), B = solid(2, Color::Red);
    auto p = majority_vote(from_tally({{B, 1}, {A, 3}}), 2);
    ASSERT_EQ(p.attempts.size(), 2u);
    EXPECT_EQ(p.attempts[0], single(A));
    EXPECT_EQ(p.attempts[1], single(B));
    EXPECT_EQ(p.diagnostics.vote_tally.front().second, 3);
}

TEST(Selection, MajorityTieGoesToSmallerHash) {
    const Grid A = solid(2, Color::Blue), B = solid(2, Color::Red);
    const Grid low = attempt_hash(single(A)) < attempt_hash(single(B)) ? A : B;
    EXPECT_EQ(majority_vote(from_tally({{A, 2}, {B, 2}}), 1).attempts[0], single(low));
    EXPECT_EQ(majority_vote(from_tally({{B, 2}, {A, 2}}), 1).attempts[0], single(low));
}

TEST(Selection, MajorityPluralityProperty) {
    Rng rng(9);
    for (int trial = 0; trial < 2000; ++trial) {
        const int distinct = rng.uniform_int(1, 6);
        std::vector<std::pair<Grid, int>> tally;
        int total = 0;
        for (int i = 0; i < distinct; ++i) {
            const int n = rng.uniform_int(1, 12);
            tally.push_back({solid(i + 1, Color::Teal), n});
            total += n;
        }
        auto F = from_tally(tally);
        rng.shuffle(F);
        auto p = majority_vote(F, 2);
        for (const auto& [g, n] : tally)
            if (2 * n > total) EXPECT_EQ(p.attempts[0], single(g));
    }
}

// ---- false positives ----

TEST(FalsePositives, Rates) {
    const Grid good = solid(1, Color::Blue), bad = solid(1, Color::Red);
    EXPECT_DOUBLE_EQ(false_positive_stats(from_tally({{good, 4}}), single(good))->rate, 0.0);
    auto e = false_positive_stats(from_tally({{good, 3}, {bad, 1}}), single(good));
    EXPECT_DOUBLE_EQ(e->rate, 0.25);
    EXPECT_EQ(e->wrong, 1);
    EXPECT_FALSE(false_positive_stats({}, single(good)));
}

TEST(FalsePositives, LowRateMeansMajorityIsRight) {
    Rng rng(31);
    FalsePositiveHistogram hist;
    const Grid truth = solid(3, Color::Yellow);
    for (int task = 0; task < 500; ++task) {
        std::vector<std::pair<Grid, int>> tally{{truth, rng.uniform_int(0, 10)}};
        for (int w = 0; w < rng.uniform_int(0, 3); ++w) tally.push_back({solid(4 + w, Color::Pink), rng.uniform_int(1, 5)});
        auto F = from_tally(tally);
        auto e = false_positive_stats(F, single(truth));
        if (!e) continue;
        hist.add(*e);
        if (e->rate < 0.5) EXPECT_EQ(majority_vote(F, 2).attempts[0], single(truth));
    }
    int binned = 0;
    for (int b : hist.bins) binned += b;
    EXPECT_EQ(binned, hist.tasks);
}

// ---- reranking ----

TEST(Rerank, IdentityKeepsBeamOrder) {
    Rng rng(5);
    Task t = make_task("r", rng, rot180);
    EquivariantPredictor predictor;
    auto r = rerank_with_augmentations(t, predictor, {{}});
    const auto beam = predictor.predict(t);
    ASSERT_EQ(r.ranked.size(), beam.size());
    for (std::size_t i = 0; i < beam.size(); ++i) EXPECT_EQ(r.ranked[i].output, beam[i].output);
}

TEST(Rerank, FrequencyBeatsScore) {
    const Grid y1 = solid(2, Color::Blue), y2 = solid(2, Color::Red);
    // Sets: identity, transpose, transpose twice (= identity). y1 appears
    // in all three with mean -1.2; y2 in two with mean -0.5.
    const double s1[] = {-1.0, -1.2, -1.4};
    int call = 0;
    ScriptedPredictor predictor([&](const Task& task) {
        const int i = call++;
        const bool transposed = task.test_inputs[0].width() != 3;
        auto to_space = [&](const Grid& g) { return transposed ? transpose(g) : g; };
        std::vector<BeamCandidate> out{{to_space(y1), s1[i]}};
        if (i < 2) out.push_back({to_space(y2), -0.5});
        return out;
    });
    Task t;
    t.train = {{Grid(3, 2), Grid(3, 2)}};
    t.test_inputs = {Grid(3, 2)};
    auto r = rerank_with_augmentations(
        t, predictor, {{}, {Augmentation::transpose()}, {Augmentation::transpose(), Augmentation::transpose()}});
    ASSERT_EQ(r.ranked.size(), 2u);
    EXPECT_EQ(r.ranked[0].output, y1);
    EXPECT_EQ(r.ranked[0].freq, 3);
    EXPECT_NEAR(r.ranked[0].mean_score, -1.2, 1e-12);
    EXPECT_EQ(r.ranked[1].freq, 2);
    EXPECT_NEAR(r.ranked[1].mean_score, -0.5, 1e-12);
}

TEST(Rerank, EquivariantPredictorKeepsTop1) {
    Rng rng(6);
    EquivariantPredictor predictor;
    for (int i = 0; i < 50; ++i) {
        Task t = make_task("eq" + std::to_string(i), rng, rot180);
        const auto baseline = predictor.predict(t).front().output;
        auto r = rerank_with_augmentations(t, predictor, {{}, {Augmentation::transpose()}});
        ASSERT_FALSE(r.ranked.empty());
        EXPECT_EQ(r.ranked[0].output, baseline);
    }
}

TEST(Rerank, TransformOrderDoesNotMatter) {
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        Task t = make_task("o", rng, rot180);
        ScriptedPredictor predictor([&](const Task& task) {
            std::vector<BeamCandidate> out;
            Rng r(canonical_hash(task.test_inputs[0]).lo);
            for (int j = 0; j < 4; ++j) out.push_back({oracle::random_grid(r, 2, 2), -r.uniform01() * 3.0});
            out.push_back({rot180(task.test_inputs[0]), -r.uniform01()});
            return out;
        });
        auto sets = default_rerank_sets(rng);
        auto a = rerank_with_augmentations(t, predictor, sets);
        rng.shuffle(sets);
        auto b = rerank_with_augmentations(t, predictor, sets);
        ASSERT_EQ(a.ranked.size(), b.ranked.size());
        for (std::size_t j = 0; j < a.ranked.size(); ++j) {
            EXPECT_EQ(a.ranked[j].hash, b.ranked[j].hash);
            EXPECT_EQ(a.ranked[j].mean_score, b.ranked[j].mean_score);
        }
    }
}

TEST(Rerank, FailingTransformIsSkipped) {
    Rng rng(8);
    Task t = make_task("f", rng, rot180);
    EquivariantPredictor inner;
    ScriptedPredictor predictor([&](const Task& task) {
        if (task.test_inputs[0] != t.test_inputs[0]) throw EndpointError("down");
        return inner.predict(task);
    });
    auto r = rerank_with_augmentations(t, predictor, {{}, {Augmentation::transpose()}});
    ASSERT_EQ(r.failed_transforms.size(), 1u);
    EXPECT_NE(r.failed_transforms[0].find("transpose"), std::string::npos);
    EXPECT_EQ(r.ranked.front().output, rot180(t.test_inputs[0]));
}

TEST(Rerank, PredictorNeverSeesTruth) {
    Rng rng(9);
    Task t = make_task("blind", rng, rot180);
    ScriptedPredictor predictor([](const Task& task) {
        EXPECT_FALSE(task.has_truth());
        return std::vector<BeamCandidate>{{task.test_inputs[0], 0.0}};
    });
    rerank_with_augmentations(t, predictor, {{}, {Augmentation::transpose()}});
    transduction_solve(t, predictor, 2);
}

TEST(Augmentations, InverseUndoesEverySet) {
    Rng rng(10);
    for (int i = 0; i < 300; ++i) {
        AugmentationSet set;
        for (int j = rng.uniform_int(0, 4); j > 0; --j)
            set.push_back(rng.bernoulli(0.5) ? Augmentation::transpose() : Augmentation::color_permute(random_perm(rng)));
        const Grid g = oracle::random_grid(rng, 9, 9);
        EXPECT_EQ(apply_augmentations(invert(set), apply_augmentations(set, g)), g) << describe(set);
    }
    for (const auto& set : default_rerank_sets(rng)) {
        const Grid g = oracle::random_grid(rng, 9, 9);
        EXPECT_EQ(apply_augmentations(invert(set), apply_augmentations(set, g)), g);
    }
}

// ---- transduction and ensemble ----

TEST(Transduction, MultiTestAttemptsPairUp) {
    Rng rng(11);
    Task t = make_task("multi", rng, rot180, 3, 2);
    EquivariantPredictor predictor;
    auto p = transduction_solve(t, predictor, 2);
    ASSERT_EQ(p.attempts.size(), 2u);
    EXPECT_EQ(p.attempts[0], *t.test_outputs);
    EXPECT_EQ(p.provenance, Provenance::Transduction);
    EXPECT_EQ(predictor.calls, 2);
}

TEST(Ensemble, BranchSelection) {
    Rng rng(12);
    Task t = make_task("e", rng, rot180);
    EquivariantPredictor predictor;
    ScriptedSampler good([](const Task&, int, const SamplerConfig&) {
        return std::vector<CandidateProgram>{program("good", rot180)};
    });
    ScriptedSampler bad([](const Task&, int, const SamplerConfig&) {
        return std::vector<CandidateProgram>{program("bad", flip_lr)};
    });
    auto a = ensemble_solve(t, {&good, {}}, {&predictor, {}}, 2, rng);
    EXPECT_EQ(a.provenance, Provenance::Induction);
    EXPECT_EQ(a.diagnostics.filtered, 1);
    auto b = ensemble_solve(t, {&bad, {}}, {&predictor, {}}, 2, rng);
    EXPECT_EQ(b.provenance, Provenance::Transduction);
    EXPECT_EQ(b.diagnostics.filtered, 0);
    EXPECT_EQ(b.attempts[0], *t.test_outputs);
}

TEST(Ensemble, AccuracyIsExactBranchMixture) {
    Rng rng(13);
    const std::vector<Fn> rules = {rot180, flip_lr, flip_ud, transpose};
    const std::vector<Fn> wrong = {[](const Grid& g) { return g; }, [](const Grid& g) { return rot180(transpose(g)); }};
    int expected_solved = 0, solved = 0;
    int induction_tasks = 0;
    for (int i = 0; i < 100; ++i) {
        const Fn& rule = rules[i % rules.size()];
        Task t = make_task("mock" + std::to_string(i), rng, rule);
        // Scripted solvability: some tasks get the right program, some only
        // a wrong one; the predictor gets every third task right.
        std::vector<Fn> fns;
        if (rng.bernoulli(0.5)) fns.push_back(rule);
        fns.push_back(wrong[i % 2]);
        if (rng.bernoulli(0.3)) fns.push_back(rules[(i + 1) % rules.size()]);
        const bool transduction_right = i % 3 == 0;
        std::vector<CandidateProgram> programs;
        for (std::size_t j = 0; j < fns.size(); ++j) programs.push_back(program("m" + std::to_string(j), fns[j]));
        ScriptedSampler sampler([&](const Task&, int, const SamplerConfig&) { return programs; });
        ScriptedPredictor predictor([&](const Task& task) {
            const Grid& x = task.test_inputs[0];
            return std::vector<BeamCandidate>{{transduction_right ? rule(x) : Grid(1, 1, Color::Brown), -0.1}};
        });

        // Branch oracle: which programs fit, and would each branch solve it?
        bool any_fit = false, induction_right = false;
        std::map<Digest, int> votes;
        for (const auto& f : fns) {
            bool fits = true;
            for (const auto& p : t.train) fits = fits && f(p.input) == p.output;
            if (!fits) continue;
            any_fit = true;
            votes[canonical_hash(f(t.test_inputs[0]))]++;
        }
        if (any_fit) {
            std::vector<std::pair<int, Digest>> ranked;
            for (const auto& [h, n] : votes) ranked.push_back({-n, h});
            std::sort(ranked.begin(), ranked.end());
            const Digest truth = canonical_hash((*t.test_outputs)[0]);
            for (std::size_t j = 0; j < ranked.size() && j < 2; ++j) induction_right = induction_right || ranked[j].second == truth;
        }
        const bool expect = any_fit ? induction_right : transduction_right;
        expected_solved += expect;
        induction_tasks += any_fit;

        InductionConfig icfg;
        icfg.selection = Selection::MajorityVote;
        auto pred = ensemble_solve(t, {&sampler, icfg}, {&predictor, {}}, 2, rng);
        EXPECT_EQ(pred.provenance == Provenance::Transduction, !any_fit) << t.id;
        const bool got = any_correct(pred, t, 2);
        EXPECT_EQ(got, expect) << t.id;
        solved += got;
    }
    EXPECT_EQ(solved, expected_solved);
    EXPECT_GT(induction_tasks, 20);
    EXPECT_LT(induction_tasks, 80);
}

// ---- test-time training data ----

TEST(TTT, CountFormula) {
    Rng rng(14);
    std::vector<Task> tasks{make_task("a", rng, rot180, 3)};
    auto d = build_ttt_dataset(tasks, 10, rng);
    EXPECT_EQ(d.records.size(), 30u);
    std::set<std::string> ids;
    for (const auto& r : d.records) ids.insert(r.example.id);
    EXPECT_EQ(ids.size(), 30u);

    tasks.push_back(make_task("b", rng, flip_lr, 4));
    tasks.push_back(make_task("c", rng, flip_lr, 1));
    auto mix = std::vector<json>(7, json{{"id", "extra"}});
    auto e = build_ttt_dataset(tasks, 2, rng, default_ttt_augmentation, mix);
    EXPECT_EQ(e.records.size(), 2u * (3 + 4));
    EXPECT_EQ(e.size(), 14u + 7u);
    EXPECT_EQ(e.skipped, std::vector<std::string>{"c"});
}

TEST(TTT, FakeTestIsAugmentedTrainPair) {
    Rng rng(15);
    Task t = make_task("x", rng, rot180, 3);
    auto fixed = [](Rng&) { return AugmentationSet{Augmentation::transpose()}; };
    auto d = build_ttt_dataset({t}, 1, rng, fixed);
    ASSERT_EQ(d.records.size(), 3u);
    for (const auto& r : d.records) {
        const auto& pair = t.train[r.fake_index];
        const auto answer = r.example.messages.back().content;
        EXPECT_NE(answer.find(encode_grid_text(transpose(pair.output))), std::string::npos);
        EXPECT_EQ(r.augmentation, "transpose");
        EXPECT_EQ(r.example.messages.size(), 3u);
    }
}

TEST(TTT, NeverReadsTestOutputs) {
    Rng rng(16);
    std::vector<Task> tasks;
    for (int i = 0; i < 20; ++i) tasks.push_back(make_task("p" + std::to_string(i), rng, flip_ud, 3));
    // Distinctive 8x8 answers so a leak would show up verbatim.
    for (auto& t : tasks) (*t.test_outputs)[0] = oracle::random_grid(rng, 8, 8, 10, 8);
    Rng a(77), b(77);
    auto with_truth = build_ttt_dataset(tasks, 3, a);
    std::vector<Task> blind;
    for (const auto& t : tasks) {
        Task u = t.without_truth();
        u.test_inputs = {Grid(1, 1)};
        blind.push_back(u);
    }
    auto without = build_ttt_dataset(blind, 3, b);
    std::ostringstream x, y;
    with_truth.write_jsonl(x);
    without.write_jsonl(y);
    EXPECT_EQ(x.str(), y.str());
    for (const auto& t : tasks) EXPECT_EQ(x.str().find(encode_grid_text((*t.test_outputs)[0])), std::string::npos);
}

// ---- adapters and presets ----

TEST(Adapters, ModelSamplerBuildsExternalPrograms) {
    int requests = 0;
    synth::ModelClient client(std::make_unique<synth::ScriptedBackend>([&](const std::string&, const json& body) {
        ++requests;
        json choices = json::array();
        for (int i = 0; i < body.at("n").get<int>(); ++i) {
            const std::string text = i % 2 ? "no code" : "```python\n# program: seed 3c9b0459\n```";
            choices.push_back({{"message", {{"content", text}}}});
        }
        return json{{"choices", choices}};
    }));
    ModelSampler sampler(client, std::string("'") + ARCKIT_PROTOCOL_PROGRAM + "' --source {source}", "m", 4);
    Rng rng(17);
    Task t = make_task("s", rng, rot180);
    auto programs = sampler.sample(t, 10, {});
    EXPECT_EQ(requests, 3);
    EXPECT_EQ(programs.size(), 5u);
    EXPECT_EQ(sampler.dropped(), 5);
    auto F = induction_filter(t, programs);
    EXPECT_EQ(F.members.size(), 5u);
    EXPECT_EQ(majority_vote(F.members, 2).attempts[0], *t.test_outputs);
}

TEST(Adapters, ModelPredictorScoresAndParses) {
    synth::ModelClient client(std::make_unique<synth::ScriptedBackend>([](const std::string&, const json& body) {
        EXPECT_EQ(body.at("n"), 3);
        json choices = json::array();
        choices.push_back({{"message", {{"content", "The output grid for the test input grid is:\n```\nBlue\n```"}}},
                           {"logprobs", {{"content", json::array({{{"logprob", -2.0}}, {{"logprob", -1.0}}})}}}});
        choices.push_back({{"message", {{"content", "```\nRed Red\n```"}}},
                           {"logprobs", {{"content", json::array({{{"logprob", -0.5}}})}}}});
        choices.push_back({{"message", {{"content", "```\nPurple\n```"}}}});
        return json{{"choices", choices}};
    }));
    ModelPredictor predictor(client, 3);
    Rng rng(18);
    auto beam = predictor.predict(make_task("p", rng, rot180));
    ASSERT_EQ(beam.size(), 2u);
    EXPECT_EQ(beam[0].output, Grid(2, 1, Color::Red));
    EXPECT_DOUBLE_EQ(beam[0].score, -0.5);
    EXPECT_DOUBLE_EQ(beam[1].score, -3.0);
}

TEST(Presets, ReferenceConfigurations) {
    EXPECT_EQ(find_preset("potpourri-ensemble").reference_validation, 56.75);
    EXPECT_EQ(find_preset("gpt4-desc-ensemble").reference_validation, 26.50);
    EXPECT_EQ(find_preset("small-ensemble").reference_private_test, 19.0);
    EXPECT_EQ(find_preset("small-ensemble").budget, 336);
    EXPECT_EQ(find_preset("small-induction").budget, 384);
    EXPECT_EQ(find_preset("small-transduction").beam_width, 3);
    EXPECT_EQ(find_preset("heavy-induction").budget, 10000);
    EXPECT_EQ(find_preset("potpourri-induction").budget, 20000);
    EXPECT_EQ(find_preset("gpt4-desc-induction").budget, 2048);
    EXPECT_EQ(find_preset("concept-arc-induction").attempts, 3u);
    EXPECT_DOUBLE_EQ(kReferenceFalsePositiveRate, 0.09);
    for (const auto& p : solver_presets()) {
        EXPECT_EQ(p.to_json()["reproduced"], false);
        EXPECT_DOUBLE_EQ(p.temperature, 0.8);
    }
    EXPECT_THROW(find_preset("nope"), DataError);
}

TEST(Prediction, JsonRoundTrip) {
    Prediction p{"t", {{Grid(2, 2, Color::Blue)}, {Grid(1, 3, Color::Red)}}, Provenance::Transduction, {}};
    auto q = Prediction::from_json(json::parse(p.to_json().dump()));
    EXPECT_EQ(q.attempts, p.attempts);
    EXPECT_EQ(q.provenance, p.provenance);
    EXPECT_EQ(q.task_id, "t");
}
