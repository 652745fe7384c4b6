"""Text format for belief models, signals, and games.

Hand-written lexer and recursive-descent parser with line/column
diagnostics, a normalized document form, and a canonical serializer.
Parsing a serialized document gives the document back; serializing a
parsed document is idempotent after one round trip.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import BeliefModel, BeliefOperator, Event, StateSpace
from .games import Game, GameModel
from .signals import Signal

KEYWORDS = frozenset(
    {
        "states",
        "player",
        "signal",
        "game",
        "kripke",
        "table",
        "core",
        "family",
        "actions",
        "rank",
        "strategy",
    }
)

PUNCT = {
    "{": "LBRACE",
    "}": "RBRACE",
    "(": "LPAREN",
    ")": "RPAREN",
    ":": "COLON",
    ";": "SEMI",
    ",": "COMMA",
    "=": "EQUALS",
}


class ModelSpecError(Exception):
    """Parse or validation failure with a source location."""

    def __init__(self, kind: str, message: str, line: int, col: int):
        super().__init__(f"{kind} error at {line}:{col}: {message}")
        self.kind = kind
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    col: int


def _lex(text: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch in PUNCT:
            tokens.append(Token(PUNCT[ch], ch, line, col))
            i += 1
            col += 1
            continue
        if ch == "→" or (ch == "-" and i + 1 < n and text[i + 1] == ">"):
            width = 1 if ch == "→" else 2
            tokens.append(Token("ARROW", text[i : i + width], line, col))
            i += width
            col += width
            continue
        if ch == ">":
            raise ModelSpecError("lexical", "stray '>'", line, col)
        start, start_col = i, col
        while i < n:
            ch = text[i]
            if ch.isspace() or ch in PUNCT or ch == "#" or ch == "→":
                break
            if ch == "-" and i + 1 < n and text[i + 1] == ">":
                break
            i += 1
            col += 1
        tokens.append(Token("WORD", text[start:i], line, start_col))
    tokens.append(Token("EOF", "", line, col))
    return tokens


@dataclass(frozen=True)
class PlayerSpec:
    """One player's operator block, entries normalized and sorted."""

    name: str
    kind: str
    kripke: tuple[tuple[str, tuple[str, ...]], ...] = ()
    entries: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...] = ()


@dataclass(frozen=True)
class SignalSpec:
    name: str
    codomain: tuple[str, ...]
    assignment: tuple[tuple[str, str], ...]
    family: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class GameSpec:
    actions: tuple[tuple[str, tuple[str, ...]], ...]
    ranks: tuple[tuple[str, tuple[str, ...], int], ...]
    strategies: tuple[tuple[str, tuple[str, ...]], ...]


@dataclass(frozen=True)
class ModelSpecDocument:
    """Normalized parse result; equal documents serialize identically."""

    states: tuple[str, ...]
    players: tuple[PlayerSpec, ...] = ()
    signals: tuple[SignalSpec, ...] = ()
    game: GameSpec | None = None

    def space(self) -> StateSpace:
        return StateSpace(self.states)

    def belief_model(self) -> BeliefModel:
        if not self.players:
            raise ValueError("document declares no players")
        space = self.space()
        operators = {}
        for spec in self.players:
            operators[spec.name] = _operator_from_spec(space, spec)
        return BeliefModel(space, operators)

    def signal(self, name: str) -> Signal:
        space = self.space()
        for spec in self.signals:
            if spec.name == name:
                values = dict(spec.assignment)
                return Signal(
                    space,
                    codomain=spec.codomain,
                    assignment=tuple(values[s] for s in self.states),
                    family=tuple(frozenset(m) for m in spec.family),
                    name=spec.name,
                )
        raise KeyError(f"unknown signal: {name}")

    def game_model(self) -> GameModel:
        if self.game is None:
            raise ValueError("document declares no game")
        belief = self.belief_model()
        actions = {p: list(acts) for p, acts in self.game.actions}
        profiles: dict[str, dict[tuple, int]] = {p: {} for p in actions}
        for player, profile, value in self.game.ranks:
            profiles[player][profile] = value
        game = Game.of(actions, profiles)
        strategies = {p: dict(zip(self.states, row)) for p, row in self.game.strategies}
        return GameModel.of(belief, game, strategies)


def _operator_from_spec(space: StateSpace, spec: PlayerSpec) -> BeliefOperator:
    if spec.kind == "kripke":
        possible = tuple(
            space.event(states).bits for _, states in spec.kripke
        )
        return BeliefOperator.from_correspondence(
            _correspondence(space, possible), owner=spec.name
        )
    images = {
        space.event(key): space.event(value) for key, value in spec.entries
    }
    if spec.kind == "table":
        return BeliefOperator.from_table(space, images, owner=spec.name)
    return BeliefOperator.monotone_closure(space, images, owner=spec.name)


def _correspondence(space: StateSpace, possible: tuple[int, ...]):
    from .core import PossibilityCorrespondence

    return PossibilityCorrespondence(space, possible)


class _Parser:
    def __init__(self, text: str):
        self.tokens = _lex(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok: Token | None = None, kind: str = "syntax"):
        tok = tok or self.peek()
        raise ModelSpecError(kind, message, tok.line, tok.col)

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            shown = tok.value or "end of input"
            self.error(f"expected {what}, found {shown!r}")
        return self.next()

    def word(self, what: str, allow_keyword: bool = False) -> Token:
        tok = self.expect("WORD", what)
        if not allow_keyword and tok.value in KEYWORDS:
            self.error(f"keyword {tok.value!r} cannot be used as {what}", tok)
        return tok

    def keyword(self, *names: str) -> Token:
        tok = self.peek()
        if tok.kind != "WORD" or tok.value not in names:
            expected = " or ".join(repr(n) for n in names)
            shown = tok.value or "end of input"
            self.error(f"expected {expected}, found {shown!r}")
        return self.next()

    def at_keyword(self, name: str) -> bool:
        tok = self.peek()
        return tok.kind == "WORD" and tok.value == name

    def opt_comma(self) -> None:
        if self.peek().kind == "COMMA":
            self.next()

    def set_literal(self, what: str) -> tuple[list[str], Token]:
        open_tok = self.expect("LBRACE", f"'{{' opening a {what} set")
        items = []
        while self.peek().kind != "RBRACE":
            items.append(self.word(f"{what} name").value)
            if self.peek().kind == "COMMA":
                self.next()
            elif self.peek().kind != "RBRACE":
                self.error(f"expected ',' or '}}' in {what} set")
        self.next()
        return items, open_tok

    # document level

    def parse(self) -> ModelSpecDocument:
        if self.peek().kind == "EOF":
            self.error("empty input: expected a 'states' declaration")
        states = self.parse_states()
        players: list[PlayerSpec] = []
        signals: list[SignalSpec] = []
        game: GameSpec | None = None
        game_tok: Token | None = None
        while self.peek().kind != "EOF":
            tok = self.keyword("player", "signal", "game", "states")
            if tok.value == "states":
                self.error("duplicate 'states' declaration", tok, kind="semantic")
            if tok.value == "player":
                players.append(self.parse_player(states, players))
            elif tok.value == "signal":
                signals.append(self.parse_signal(states, signals))
            else:
                if game is not None:
                    self.error("duplicate 'game' block", tok, kind="semantic")
                game_tok = tok
                game = self.parse_game(states)
        if game is not None:
            self._check_game_players(game, players, game_tok)
        return ModelSpecDocument(
            states=tuple(states),
            players=tuple(players),
            signals=tuple(signals),
            game=game,
        )

    def parse_states(self) -> list[str]:
        self.keyword("states")
        states = []
        while self.peek().kind == "WORD":
            tok = self.word("state name")
            if tok.value in states:
                self.error(f"duplicate state: {tok.value}", tok, kind="semantic")
            states.append(tok.value)
        if not states:
            self.error("expected at least one state name")
        self.expect("SEMI", "';' after the state list")
        return states

    def parse_player(
        self, states: list[str], seen: list[PlayerSpec]
    ) -> PlayerSpec:
        name_tok = self.word("player name")
        if any(p.name == name_tok.value for p in seen):
            self.error(
                f"duplicate player: {name_tok.value}", name_tok, kind="semantic"
            )
        self.expect("LBRACE", "'{' opening the player block")
        kind_tok = self.keyword("kripke", "table", "core")
        self.expect("LBRACE", f"'{{' opening the {kind_tok.value} block")
        if kind_tok.value == "kripke":
            spec = self.parse_kripke_entries(name_tok.value, states, kind_tok)
        else:
            spec = self.parse_table_entries(name_tok.value, kind_tok.value, states)
        self.expect("RBRACE", "'}' closing the player block")
        return spec

    def parse_kripke_entries(
        self, player: str, states: list[str], block_tok: Token
    ) -> PlayerSpec:
        entries: dict[str, tuple[str, ...]] = {}
        while self.peek().kind != "RBRACE":
            state_tok = self.word("state name")
            state = state_tok.value
            if state not in states:
                self.error(f"unknown state: {state}", state_tok, kind="semantic")
            if state in entries:
                self.error(
                    f"duplicate entry for state {state}", state_tok, kind="semantic"
                )
            self.expect("COLON", "':' after the state name")
            items, set_tok = self.set_literal("state")
            entries[state] = self._state_set(items, states, set_tok)
            self.opt_comma()
        self.next()
        for state in states:
            if state not in entries:
                self.error(
                    f"kripke block is missing state {state}",
                    block_tok,
                    kind="semantic",
                )
        ordered = tuple((s, entries[s]) for s in states)
        return PlayerSpec(name=player, kind="kripke", kripke=ordered)

    def parse_table_entries(
        self, player: str, kind: str, states: list[str]
    ) -> PlayerSpec:
        entries: dict[tuple[str, ...], tuple[str, ...]] = {}
        order: dict[tuple[str, ...], int] = {}
        while self.peek().kind != "RBRACE":
            key_items, key_tok = self.set_literal("state")
            key = self._state_set(key_items, states, key_tok)
            if key in entries:
                shown = "{" + ", ".join(key) + "}"
                self.error(f"duplicate entry for {shown}", key_tok, kind="semantic")
            self.expect("COLON", "':' after the event")
            value_items, value_tok = self.set_literal("state")
            entries[key] = self._state_set(value_items, states, value_tok)
            order[key] = self._event_mask(key, states)
            self.opt_comma()
        close_tok = self.next()
        # a table block promises an image for every event; core blocks may be partial
        if kind == "table" and len(entries) != 1 << len(states):
            self.error(
                f"table has {len(entries)} of {1 << len(states)} events",
                close_tok,
                kind="semantic",
            )
        ordered = tuple(
            (key, entries[key]) for key in sorted(entries, key=order.__getitem__)
        )
        return PlayerSpec(name=player, kind=kind, entries=ordered)

    def _state_set(
        self, items: list[str], states: list[str], tok: Token
    ) -> tuple[str, ...]:
        for item in items:
            if item not in states:
                self.error(f"unknown state: {item}", tok, kind="semantic")
        if len(set(items)) != len(items):
            self.error("duplicate state in set", tok, kind="semantic")
        return tuple(sorted(items, key=states.index))

    @staticmethod
    def _event_mask(key: tuple[str, ...], states: list[str]) -> int:
        mask = 0
        for item in key:
            mask |= 1 << states.index(item)
        return mask

    def parse_signal(
        self, states: list[str], seen: list[SignalSpec]
    ) -> SignalSpec:
        name_tok = self.word("signal name")
        if any(s.name == name_tok.value for s in seen):
            self.error(
                f"duplicate signal: {name_tok.value}", name_tok, kind="semantic"
            )
        self.expect("COLON", "':' before the codomain")
        codomain = []
        while self.peek().kind == "WORD":
            tok = self.word("codomain value")
            if tok.value in codomain:
                self.error(
                    f"duplicate codomain value: {tok.value}", tok, kind="semantic"
                )
            codomain.append(tok.value)
        if not codomain:
            self.error("expected at least one codomain value")
        self.expect("LBRACE", "'{' opening the assignment block")
        assignment: dict[str, str] = {}
        while self.peek().kind != "RBRACE":
            state_tok = self.word("state name")
            if state_tok.value not in states:
                self.error(
                    f"unknown state: {state_tok.value}", state_tok, kind="semantic"
                )
            if state_tok.value in assignment:
                self.error(
                    f"duplicate assignment for {state_tok.value}",
                    state_tok,
                    kind="semantic",
                )
            self.expect("ARROW", "'->' in the assignment")
            value_tok = self.word("codomain value")
            if value_tok.value not in codomain:
                self.error(
                    f"value outside the codomain: {value_tok.value}",
                    value_tok,
                    kind="semantic",
                )
            assignment[state_tok.value] = value_tok.value
            self.opt_comma()
        close_tok = self.next()
        for state in states:
            if state not in assignment:
                self.error(
                    f"assignment is missing state {state}", close_tok, kind="semantic"
                )
        self.keyword("family")
        self.expect("LBRACE", "'{' opening the family block")
        members: list[tuple[str, ...]] = []
        while self.peek().kind != "RBRACE":
            items, set_tok = self.set_literal("codomain value")
            for item in items:
                if item not in codomain:
                    self.error(
                        f"value outside the codomain: {item}", set_tok, kind="semantic"
                    )
            if len(set(items)) != len(items):
                self.error("duplicate value in family member", set_tok, kind="semantic")
            member = tuple(sorted(items, key=codomain.index))
            if member not in members:
                members.append(member)
            self.opt_comma()
        self.next()
        members.sort(key=lambda m: tuple(codomain.index(v) for v in m))
        return SignalSpec(
            name=name_tok.value,
            codomain=tuple(codomain),
            assignment=tuple((s, assignment[s]) for s in states),
            family=tuple(members),
        )

    def parse_game(self, states: list[str]) -> GameSpec:
        open_tok = self.expect("LBRACE", "'{' opening the game block")
        actions: dict[str, tuple[str, ...]] = {}
        ranks: list[tuple[str, tuple[str, ...], int, Token]] = []
        strategies: dict[str, tuple[str, ...]] = {}
        while self.peek().kind != "RBRACE":
            tok = self.keyword("actions", "rank", "strategy")
            if tok.value == "actions":
                player_tok = self.word("player name")
                if player_tok.value in actions:
                    self.error(
                        f"duplicate actions for player {player_tok.value}",
                        player_tok,
                        kind="semantic",
                    )
                self.expect("COLON", "':' after the player name")
                acts = []
                while self.peek().kind == "WORD":
                    act_tok = self.word("action name")
                    if act_tok.value in acts:
                        self.error(
                            f"duplicate action: {act_tok.value}",
                            act_tok,
                            kind="semantic",
                        )
                    acts.append(act_tok.value)
                if not acts:
                    self.error("expected at least one action")
                self.expect("SEMI", "';' after the action list")
                actions[player_tok.value] = tuple(acts)
            elif tok.value == "rank":
                player_tok = self.word("player name")
                self.expect("COLON", "':' after the player name")
                self.expect("LPAREN", "'(' opening the profile")
                profile = [self.word("action name").value]
                while self.peek().kind == "COMMA":
                    self.next()
                    profile.append(self.word("action name").value)
                self.expect("RPAREN", "')' closing the profile")
                self.expect("EQUALS", "'=' before the rank")
                value_tok = self.word("integer rank")
                try:
                    value = int(value_tok.value)
                except ValueError:
                    self.error(
                        f"rank must be an integer, found {value_tok.value!r}",
                        value_tok,
                    )
                self.expect("SEMI", "';' after the rank")
                ranks.append((player_tok.value, tuple(profile), value, player_tok))
            else:
                player_tok = self.word("player name")
                if player_tok.value in strategies:
                    self.error(
                        f"duplicate strategy for player {player_tok.value}",
                        player_tok,
                        kind="semantic",
                    )
                self.expect("LBRACE", "'{' opening the strategy block")
                row: dict[str, str] = {}
                while self.peek().kind != "RBRACE":
                    state_tok = self.word("state name")
                    if state_tok.value not in states:
                        self.error(
                            f"unknown state: {state_tok.value}",
                            state_tok,
                            kind="semantic",
                        )
                    if state_tok.value in row:
                        self.error(
                            f"duplicate assignment for {state_tok.value}",
                            state_tok,
                            kind="semantic",
                        )
                    self.expect("ARROW", "'->' in the strategy")
                    row[state_tok.value] = self.word("action name").value
                    self.opt_comma()
                close_tok = self.next()
                for state in states:
                    if state not in row:
                        self.error(
                            f"strategy is missing state {state}",
                            close_tok,
                            kind="semantic",
                        )
                strategies[player_tok.value] = tuple(row[s] for s in states)
        self.next()
        return self._assemble_game(actions, ranks, strategies, states, open_tok)

    def _assemble_game(
        self,
        actions: dict[str, tuple[str, ...]],
        ranks: list[tuple[str, tuple[str, ...], int, Token]],
        strategies: dict[str, tuple[str, ...]],
        states: list[str],
        open_tok: Token,
    ) -> GameSpec:
        if not actions:
            self.error("game declares no actions", open_tok, kind="semantic")
        players = tuple(actions)
        profiles = list(itertools.product(*(actions[p] for p in players)))
        profile_index = {pr: k for k, pr in enumerate(profiles)}
        normalized: dict[tuple[str, tuple[str, ...]], int] = {}
        for player, profile, value, tok in ranks:
            if player not in actions:
                self.error(f"unknown player: {player}", tok, kind="semantic")
            if profile not in profile_index:
                shown = "(" + ", ".join(profile) + ")"
                self.error(
                    f"unknown action profile {shown}", tok, kind="semantic"
                )
            if (player, profile) in normalized:
                self.error(
                    f"duplicate rank for player {player}", tok, kind="semantic"
                )
            normalized[(player, profile)] = value
        for player in players:
            for profile in profiles:
                if (player, profile) not in normalized:
                    shown = "(" + ", ".join(profile) + ")"
                    self.error(
                        f"no rank for player {player} at {shown}",
                        open_tok,
                        kind="semantic",
                    )
        for player, row in strategies.items():
            if player not in actions:
                self.error(f"unknown player: {player}", open_tok, kind="semantic")
            for action in row:
                if action not in actions[player]:
                    self.error(
                        f"unknown action in strategy: {action}",
                        open_tok,
                        kind="semantic",
                    )
        for player in players:
            if player not in strategies:
                self.error(
                    f"no strategy for player {player}", open_tok, kind="semantic"
                )
        ordered_ranks = tuple(
            (player, profile, normalized[(player, profile)])
            for player in players
            for profile in profiles
        )
        return GameSpec(
            actions=tuple((p, actions[p]) for p in players),
            ranks=ordered_ranks,
            strategies=tuple((p, strategies[p]) for p in players),
        )

    def _check_game_players(
        self,
        game: GameSpec,
        players: list[PlayerSpec],
        game_tok: Token | None,
    ) -> None:
        declared = {p.name for p in players}
        in_game = {p for p, _ in game.actions}
        if declared and declared != in_game:
            self.error(
                "game players differ from declared players",
                game_tok,
                kind="semantic",
            )


def parse_model_spec(text: str) -> ModelSpecDocument:
    return _Parser(text).parse()


def parse_event_literal(space: StateSpace, text: str) -> Event:
    """Brace-comma event syntax for command-line flags, e.g. '{ω1, ω2}'."""
    tokens = _lex(text)
    if tokens[0].kind != "LBRACE":
        raise ModelSpecError("syntax", "expected '{'", tokens[0].line, tokens[0].col)
    items = []
    pos = 1
    while tokens[pos].kind != "RBRACE":
        tok = tokens[pos]
        if tok.kind != "WORD":
            raise ModelSpecError("syntax", "expected a state name", tok.line, tok.col)
        if tok.value not in space.states:
            raise ModelSpecError(
                "semantic", f"unknown state: {tok.value}", tok.line, tok.col
            )
        items.append(tok.value)
        pos += 1
        if tokens[pos].kind == "COMMA":
            pos += 1
    pos += 1
    if tokens[pos].kind != "EOF":
        tok = tokens[pos]
        raise ModelSpecError(
            "syntax", "unexpected input after the closing '}'", tok.line, tok.col
        )
    return space.event(items)


def document_of(
    model: BeliefModel | None = None,
    signals: Iterable[Signal] = (),
    game_model: GameModel | None = None,
) -> ModelSpecDocument:
    """Normalized document for in-memory objects; operators with a
    stored correspondence serialize as kripke blocks, others as tables."""
    if game_model is not None:
        if model is not None and model is not game_model.belief:
            raise ValueError("game model carries a different belief model")
        model = game_model.belief
    if model is None:
        raise ValueError("nothing to serialize")
    states = model.space.states
    players = []
    for name in model.players:
        op = model.operator(name)
        if op.has_correspondence():
            possible = op.derive_correspondence()
            players.append(
                PlayerSpec(
                    name=name,
                    kind="kripke",
                    kripke=tuple(
                        (s, tuple(possible.at(s).states())) for s in states
                    ),
                )
            )
        else:
            table = op.table()
            entries = tuple(
                (
                    tuple(model.space.event_from_bits(e).states()),
                    tuple(model.space.event_from_bits(img).states()),
                )
                for e, img in enumerate(table)
            )
            players.append(PlayerSpec(name=name, kind="table", entries=entries))
    signal_specs = []
    for sig in signals:
        if sig.space != model.space:
            raise ValueError("signal on a different state space")
        codomain = tuple(str(v) for v in sig.codomain)
        by_value = {v: str(v) for v in sig.codomain}
        members = []
        for member in sig.family:
            as_tuple = tuple(
                sorted((by_value[v] for v in member), key=codomain.index)
            )
            if as_tuple not in members:
                members.append(as_tuple)
        members.sort(key=lambda m: tuple(codomain.index(v) for v in m))
        signal_specs.append(
            SignalSpec(
                name=sig.name or "x",
                codomain=codomain,
                assignment=tuple(
                    (s, by_value[sig.value_at(s)]) for s in states
                ),
                family=tuple(members),
            )
        )
    game_spec = None
    if game_model is not None:
        game = game_model.game
        profiles = list(game.profiles())
        game_spec = GameSpec(
            actions=tuple(zip(game.players, game.actions)),
            ranks=tuple(
                (player, profile, game.rank(player, profile))
                for player in game.players
                for profile in profiles
            ),
            strategies=tuple(zip(game.players, game_model.strategies)),
        )
    return ModelSpecDocument(
        states=states,
        players=tuple(players),
        signals=tuple(signal_specs),
        game=game_spec,
    )


def _set_text(items: Sequence[str]) -> str:
    return "{" + ", ".join(items) + "}"


def serialize_model_spec(doc: ModelSpecDocument) -> str:
    """Canonical text: two-space indent, one entry per line, comma
    separated, blocks in document order."""
    out = ["states " + " ".join(doc.states) + ";"]
    for player in doc.players:
        out.append("")
        out.append(f"player {player.name} {{")
        out.append(f"  {player.kind} {{")
        if player.kind == "kripke":
            lines = [
                f"    {state}: {_set_text(possible)}"
                for state, possible in player.kripke
            ]
        else:
            lines = [
                f"    {_set_text(key)}: {_set_text(value)}"
                for key, value in player.entries
            ]
        out.extend(_with_commas(lines))
        out.append("  }")
        out.append("}")
    for sig in doc.signals:
        out.append("")
        out.append(f"signal {sig.name} : " + " ".join(sig.codomain) + " {")
        out.extend(
            _with_commas([f"  {state} -> {value}" for state, value in sig.assignment])
        )
        out.append("} family {")
        out.extend(_with_commas([f"  {_set_text(member)}" for member in sig.family]))
        out.append("}")
    if doc.game is not None:
        out.append("")
        out.append("game {")
        for player, acts in doc.game.actions:
            out.append(f"  actions {player}: " + " ".join(acts) + ";")
        for player, profile, value in doc.game.ranks:
            out.append(
                f"  rank {player}: (" + ", ".join(profile) + f") = {value};"
            )
        for player, row in doc.game.strategies:
            out.append(f"  strategy {player} {{")
            out.extend(
                _with_commas(
                    [
                        f"    {state} -> {action}"
                        for state, action in zip(doc.states, row)
                    ]
                )
            )
            out.append("  }")
        out.append("}")
    return "\n".join(out) + "\n"


def _with_commas(lines: list[str]) -> list[str]:
    return [
        line + ("," if i + 1 < len(lines) else "")
        for i, line in enumerate(lines)
    ]


def serialize_model(
    model: BeliefModel | None = None,
    signals: Iterable[Signal] = (),
    game_model: GameModel | None = None,
) -> str:
    return serialize_model_spec(document_of(model, signals, game_model))
