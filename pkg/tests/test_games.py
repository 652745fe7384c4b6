"""Games on belief models: preferences, rationality, IESDA, epistemics."""

import itertools
import random

import pytest

from beliefcheck.core import (
    Axiom,
    BeliefModel,
    BeliefOperator,
    ImplicationStatus,
    PossibilityCorrespondence,
    StateSpace,
)
from beliefcheck.games import (
    EliminationTrace,
    Game,
    GameModel,
    correct_belief_chain,
    correct_belief_in_own_rationality,
    epistemic_iesda_verdict,
    iesda,
    introspective_correct_belief_chain,
    preference_event,
    rationality_event,
    rationality_event_possibility,
    self_evident_rationality_chain,
    strategy_certainty,
    strategy_signal,
    survives,
)


def all_kripke_operators(space):
    for possible in itertools.product(range(space.size), repeat=space.n):
        yield BeliefOperator.from_correspondence(
            PossibilityCorrespondence(space, possible)
        )


def identity_op(space):
    return BeliefOperator.from_correspondence(
        PossibilityCorrespondence(space, tuple(1 << i for i in range(space.n)))
    )


def two_player_model(space, game, op_r, op_c, sigma_r, sigma_c):
    return GameModel.of(
        BeliefModel(space, {"r": op_r, "c": op_c}),
        game,
        {"r": sigma_r, "c": sigma_c},
    )


def random_game(rng, sizes=(3, 3)):
    actions = {
        "r": [f"r{k}" for k in range(sizes[0])],
        "c": [f"c{k}" for k in range(sizes[1])],
    }
    profiles = list(itertools.product(actions["r"], actions["c"]))
    return Game.of(
        actions,
        {p: {pr: rng.randrange(5) for pr in profiles} for p in ("r", "c")},
    )


class TestGameBasics:
    def test_profile_enumeration_matches_indexing(self, pd_game):
        for k, profile in enumerate(pd_game.profiles()):
            assert pd_game.profile_index(profile) == k

    def test_ranks_and_relations(self, pd_game):
        assert pd_game.rank("r", ("D", "C")) == 4
        assert pd_game.rank("c", ("D", "C")) == 1
        assert pd_game.prefers("r", ("D", "C"), ("C", "C"), ">")
        assert pd_game.prefers("r", ("C", "C"), ("C", "C"), "~")
        assert not pd_game.prefers("c", ("D", "C"), ("C", "C"), ">=")
        with pytest.raises(ValueError):
            pd_game.prefers("r", ("D", "C"), ("C", "C"), "!!")
        with pytest.raises(KeyError):
            pd_game.rank("r", ("D", "X"))

    def test_validation(self):
        with pytest.raises(ValueError, match="rank missing"):
            Game.of({"r": ["a", "b"]}, {"r": {("a",): 1}})
        with pytest.raises(ValueError):
            Game.of({"r": []}, {"r": {}})
        with pytest.raises(ValueError):
            Game.of({"r": ["a", "a"]}, {"r": {("a",): 0}})

    def test_model_validation(self, space3, pd_game, identity3):
        belief = BeliefModel(space3, {"r": identity3, "c": identity3})
        with pytest.raises(ValueError, match="unknown action"):
            GameModel.of(belief, pd_game, {"r": "CDX", "c": "DDD"})
        with pytest.raises(ValueError, match="disagree on the players"):
            GameModel.of(
                BeliefModel(space3, {"x": identity3, "c": identity3}),
                pd_game,
                {"r": "CCC", "c": "DDD"},
            )
        gm = GameModel.of(belief, pd_game, {"r": "CDC", "c": "DDD"})
        assert gm.strategy("r", "ω2") == "D"
        assert set(gm.strategy_event("r", "C").states()) == {"ω1", "ω3"}
        assert gm.profile_at("ω1") == ("C", "D")


class TestPreferenceEvents:
    def test_reflexive_profiles(self, space3, pd_game, identity3):
        gm = two_player_model(
            space3, pd_game, identity3, identity3, "CDC", "DCD"
        )
        assert preference_event(gm, "r", "C", "C", "~") == space3.full
        assert preference_event(gm, "r", "C", "C", ">") == space3.empty

    def test_defection_dominates_everywhere(self, space3, pd_game, identity3):
        for sigma_c in ("CCC", "DCD"):
            gm = two_player_model(
                space3, pd_game, identity3, identity3, "CDC", sigma_c
            )
            assert preference_event(gm, "r", "D", "C", ">") == space3.full

    def test_strict_is_complement_of_reverse_weak(self, space3, identity3):
        rng = random.Random(7)
        for _ in range(3):
            game = random_game(rng)
            sigma_r = [rng.choice(game.actions_of("r")) for _ in space3.states]
            sigma_c = [rng.choice(game.actions_of("c")) for _ in space3.states]
            gm = two_player_model(
                space3, game, identity3, identity3, sigma_r, sigma_c
            )
            for alt, ref in itertools.product(game.actions_of("r"), repeat=2):
                strict = preference_event(gm, "r", alt, ref, ">")
                weak = preference_event(gm, "r", ref, alt, ">=")
                assert strict == ~weak


class TestRationality:
    def test_playing_the_dominant_action_is_rational(
        self, space3, pd_game, blindspot
    ):
        gm = two_player_model(space3, pd_game, blindspot, blindspot, "DDD", "CDC")
        assert rationality_event(gm, "r") == space3.full

    def test_dominated_action_with_full_awareness_is_irrational(
        self, space3, pd_game, identity3
    ):
        gm = two_player_model(space3, pd_game, identity3, identity3, "CCC", "DDD")
        assert rationality_event(gm, "r") == space3.empty

    def test_formulations_agree(self, space3, space2, pd_game, blindspot, identity3):
        closure = BeliefOperator.monotone_closure(
            space3,
            {
                space3.event(["ω1"]): space3.event(["ω1", "ω2"]),
                space3.event(["ω2"]): space3.full,
            },
        )
        for op in (blindspot, identity3, closure):
            for sigma_r in ("CDC", "DDD", "CCD"):
                gm = two_player_model(
                    space3, pd_game, op, identity3, sigma_r, "DCD"
                )
                assert rationality_event(gm, "r") == rationality_event_possibility(
                    gm, "r"
                )
        ident2 = identity_op(space2)
        for op in all_kripke_operators(space2):
            gm = two_player_model(space2, pd_game, op, ident2, "CD", "DC")
            for player in ("r", "c"):
                assert rationality_event(gm, player) == rationality_event_possibility(
                    gm, player
                )


class TestStrategyCertainty:
    def test_blindspot_not_certain_of_varying_strategy(
        self, space3, pd_game, blindspot
    ):
        gm = two_player_model(space3, pd_game, blindspot, blindspot, "CDC", "DDD")
        report = strategy_certainty(gm, "r")
        assert not report.certainty.holds
        assert report.certainty.failures == (("ω3", frozenset({"C"})),)

    def test_constant_strategy_certain(self, space3, pd_game, blindspot):
        gm = two_player_model(space3, pd_game, blindspot, blindspot, "DDD", "CDC")
        report = strategy_certainty(gm, "r")
        assert report.certainty.holds
        assert report.consistent
        assert all(check.holds for check in report.identities)

    def test_signal_uses_full_action_set(self, space3, pd_game, identity3):
        gm = two_player_model(space3, pd_game, identity3, identity3, "DDD", "CDC")
        assert strategy_signal(gm, "r").codomain == ("C", "D")

    def test_certainty_with_consistency_fixes_strategy_events(
        self, space2, pd_game
    ):
        ident2 = identity_op(space2)
        for op in all_kripke_operators(space2):
            for sigma_r in ("CC", "CD", "DC", "DD"):
                gm = two_player_model(space2, pd_game, op, ident2, sigma_r, "DD")
                report = strategy_certainty(gm, "r")
                if report.consistent and report.certainty.holds:
                    assert all(c.holds for c in report.identities)


class TestIesda:
    def test_prisoners_dilemma(self, pd_game):
        trace = iesda(pd_game)
        assert trace.survivors == (("D",), ("D",))
        assert trace.rounds == ((("r", "C"), ("c", "C")),)
        assert survives(trace, ("D", "D"))
        assert not survives(trace, ("C", "D"))

    def test_no_dominance_leaves_everything(self):
        game = Game.of(
            {"r": ["H", "T"], "c": ["H", "T"]},
            {
                "r": {("H", "H"): 1, ("T", "T"): 1, ("H", "T"): 0, ("T", "H"): 0},
                "c": {("H", "H"): 0, ("T", "T"): 0, ("H", "T"): 1, ("T", "H"): 1},
            },
        )
        trace = iesda(game)
        assert trace.rounds == ()
        assert trace.survivors == (("H", "T"), ("H", "T"))

    def test_chain_elimination_modes(self):
        game = Game.of(
            {"solo": ["a1", "a2", "a3"]},
            {"solo": {("a1",): 0, ("a2",): 1, ("a3",): 2}},
        )
        maximal = iesda(game)
        assert maximal.rounds == ((("solo", "a1"), ("solo", "a2")),)
        assert maximal.survivors == (("a3",),)
        seeded = iesda(game, mode="seeded", seed=5)
        assert len(seeded.rounds) == 2
        assert all(len(batch) == 1 for batch in seeded.rounds)
        assert seeded.survivors == (("a3",),)
        assert seeded.seed == 5

    def test_order_independence_on_random_games(self):
        rng = random.Random(11)
        for _ in range(30):
            game = random_game(rng)
            reference = iesda(game).survivors
            for seed in range(10):
                assert iesda(game, mode="seeded", seed=seed).survivors == reference

    def test_mode_validation(self, pd_game):
        with pytest.raises(ValueError):
            iesda(pd_game, mode="arbitrary")


class TestCorrectBelief:
    def test_identity_beliefs_are_correct(self, space3, pd_game, identity3):
        gm = two_player_model(space3, pd_game, identity3, identity3, "CDC", "DDD")
        for player in ("r", "c"):
            assert correct_belief_in_own_rationality(gm, player).holds

    def test_conjunction_failure_breaks_correctness(self, space3, pd_game, identity3):
        # Frozen counterexample: the player is certain of her strategy
        # and compatible with informativeness, yet without Finite
        # Conjunction she believes herself rational where she is not.
        op = BeliefOperator.monotone_closure(
            space3,
            {
                space3.event(["ω1"]): space3.event(["ω1", "ω2"]),
                space3.event(["ω2"]): space3.full,
            },
        )
        gm = two_player_model(space3, pd_game, op, identity3, "CDD", "DDD")
        report = strategy_certainty(gm, "r")
        assert report.certainty.holds
        assert not op.check_axiom(Axiom.FINITE_CONJUNCTION).holds

        rat = rationality_event(gm, "r")
        assert set(rat.states()) == {"ω2", "ω3"}
        containment = correct_belief_in_own_rationality(gm, "r")
        assert not containment.holds
        assert containment.witness == (rat, "ω1")

        chain = correct_belief_chain(gm, "r")
        assert chain.status is ImplicationStatus.VACUOUS
        assert dict(chain.premises)["FiniteConjunction"] is False

    def test_chains_never_violated_on_small_sweep(self, space2, pd_game):
        ident2 = identity_op(space2)
        ops = list(all_kripke_operators(space2))
        for e1, img1, full_img in itertools.product(range(1, 3), range(4), range(4)):
            try:
                ops.append(
                    BeliefOperator.monotone_closure(
                        space2,
                        {
                            space2.event_from_bits(e1): space2.event_from_bits(img1),
                            space2.full: space2.event_from_bits(full_img),
                        },
                    )
                )
            except ValueError:
                continue
        for op in ops:
            for sigma_r in ("CC", "CD", "DC", "DD"):
                gm = two_player_model(space2, pd_game, op, ident2, sigma_r, "DD")
                assert correct_belief_chain(gm, "r").status is not (
                    ImplicationStatus.VIOLATED
                )
                assert introspective_correct_belief_chain(gm, "r").status is not (
                    ImplicationStatus.VIOLATED
                )
                assert self_evident_rationality_chain(gm, "r").status is not (
                    ImplicationStatus.VIOLATED
                )


class TestEpistemicVerdict:
    def test_common_rationality_confirms_survival(self, space3, pd_game, identity3):
        gm = two_player_model(space3, pd_game, identity3, identity3, "DDD", "DDD")
        verdict = epistemic_iesda_verdict(gm, "ω1")
        assert all(b for _, b in verdict.common_rationality)
        assert all(r.holds for r in verdict.correct_belief)
        assert verdict.survives
        assert verdict.status is ImplicationStatus.CONFIRMED
        assert verdict.profile == (("r", "D"), ("c", "D"))

    def test_irrational_profile_is_vacuous_not_violated(
        self, space3, pd_game, identity3
    ):
        gm = two_player_model(space3, pd_game, identity3, identity3, "CCC", "DDD")
        verdict = epistemic_iesda_verdict(gm, "ω2")
        assert not verdict.survives
        assert verdict.status is ImplicationStatus.VACUOUS

    def test_unknown_state_rejected(self, space3, pd_game, identity3):
        gm = two_player_model(space3, pd_game, identity3, identity3, "DDD", "DDD")
        with pytest.raises(KeyError):
            epistemic_iesda_verdict(gm, "ω9")

    def test_exhaustive_small_models_never_violate(self, space2, pd_game):
        ops = list(all_kripke_operators(space2))
        sigmas = ["CC", "CD", "DC", "DD"]
        for op_r, op_c in itertools.product(ops, repeat=2):
            belief = BeliefModel(space2, {"r": op_r, "c": op_c})
            for sigma_r, sigma_c in itertools.product(sigmas, repeat=2):
                gm = GameModel.of(
                    belief, pd_game, {"r": sigma_r, "c": sigma_c}
                )
                rat_r = rationality_event(gm, "r")
                rat_c = rationality_event(gm, "c")
                common_joint = belief.common_belief(rat_r & rat_c)
                assert common_joint <= belief.common_belief(rat_r)
                assert common_joint <= belief.common_belief(rat_c)
                for state in space2.states:
                    verdict = epistemic_iesda_verdict(gm, state)
                    assert verdict.status is not ImplicationStatus.VIOLATED
