import logging
import sys
from argparse import Namespace
from typing import Callable, List, Optional, Sequence, TextIO, Tuple

from catkit import cardgame, dyck, exactnum, patterns, tableaux, verification
from catkit.config import Config
from catkit.errors import GuardExceededError, UnknownFamilyError, UsageError
from catkit.formatting import Record, format_records

logger = logging.getLogger(__name__)

# Exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


def parse_n_values(text: str) -> List[int]:
    """Read an --n value: a single integer or an inclusive range "a..b"."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError:
        raise UsageError(f"--n expects an integer or a range a..b, got {text!r}") from None
    if low < 0 or high < low:
        raise UsageError(f"--n range {text!r} must satisfy 0 <= a <= b")
    return list(range(low, high + 1))


def _split_b(text: str, b: Optional[int]) -> Tuple[str, int]:
    """Separate an optional ",b=<value>" suffix from a permutation argument."""
    if ",b=" in text:
        text, suffix = text.rsplit(",b=", 1)
        try:
            b = int(suffix)
        except ValueError:
            raise UsageError(f"cannot read split value from {suffix!r}") from None
    if b is None:
        raise UsageError("the inverse map needs the split value, as --b or ',b=<value>'")
    return text, b


def _check_shape(d: int, n: int):
    if d > n:
        raise UsageError(f"shape (n, n - d) needs d <= n, got d={d}, n={n}")


class Command:
    def __init__(self, config: Config, args: Namespace, out: Optional[TextIO] = None):
        """A command given on the command line.

        Args:
            config: catkit configuration parameters.

            args: The parsed command-line arguments.

            out: Where command output is written. Defaults to the current
                sys.stdout.
        """
        self.config = config
        self.args = args
        self.out = out or sys.stdout
        self.format = getattr(args, "format", None) or config.output_format

        logger.debug("Running command `%s` with %s", args.command, vars(args))

    def process(self) -> int:
        """Process the command and return the exit code"""
        if self.args.command == "count":
            return self._count()
        elif self.args.command == "enumerate":
            return self._enumerate()
        elif self.args.command == "map":
            return self._map()
        elif self.args.command == "verify":
            return self._verify()
        elif self.args.command == "game":
            return self._game()
        elif self.args.command == "draw":
            return self._draw()
        raise UsageError(f"unknown command {self.args.command!r}")

    def _emit(self, records: Sequence[Record], text_columns: Optional[List[str]] = None):
        text = format_records(records, self.format, text_columns)
        if text or records:
            self.out.write(text + "\n")

    def _require(self, name: str) -> int:
        value = getattr(self.args, name, None)
        if value is None:
            raise UsageError(f"--{name} is required here")
        if value < 0:
            raise UsageError(f"--{name} must be nonnegative, got {value}")
        return value

    def _n_values(self) -> List[int]:
        if self.args.n is None:
            raise UsageError("--n is required here")
        return parse_n_values(self.args.n)

    def _single_n(self) -> int:
        values = self._n_values()
        if len(values) != 1:
            raise UsageError(f"--n must be a single value here, got {self.args.n!r}")
        return values[0]

    def _split(self) -> Tuple[int, int]:
        """The (k, p) split, from --k and --p."""
        return self._require("k"), self._require("p")

    def _shape_d(self) -> int:
        """d from --d, or from --k and --p when --d is absent."""
        if self.args.d is not None:
            return self._require("d")
        if self.args.k is not None or self.args.p is not None:
            k, p = self._split()
            return k + p
        raise UsageError("give --d, or --k and --p")

    def _guard(self, n: int, bound: int, what: str):
        """Refuse exhaustive work past the configured bound, unless --max-n raises it."""
        override = getattr(self.args, "max_n", None)
        if override is not None:
            bound = override
        if n > bound:
            logger.warning("Refusing to enumerate %s with n=%d (bound %d)", what, n, bound)
            raise GuardExceededError(
                f"enumerating {what} with n={n} exceeds the bound of {bound}; "
                f"raise it with --max-n or $CATKIT_MAX_N"
            )

    def _count(self) -> int:
        """Print closed-form counts, one per requested n"""
        obj = self.args.object
        records = []
        for n in self._n_values():
            if obj in ("dyck", "syt"):
                d = self._shape_d()
                if obj == "syt":
                    _check_shape(d, n)
                count = exactnum.class_count(d, n)
                records.append({"object": obj, "d": d, "n": n, "count": count})
            elif obj == "pattern":
                family = self._family()
                count = patterns.family_count(family, n)
                records.append({"object": obj, "family": family.value, "n": n, "count": count})
            else:
                r = self._require("r")
                if r > n:
                    raise UsageError(f"the score r={r} cannot exceed n={n}")
                count = cardgame.p_exact_count(r, n)
                records.append({"object": obj, "r": r, "n": n, "count": count})
        self._emit(records, ["count"])
        return EXIT_OK

    def _family(self) -> patterns.Family:
        if not self.args.family:
            raise UsageError("--family is required here")
        try:
            return patterns.Family.lookup(self.args.family)
        except UnknownFamilyError as e:
            raise UsageError(str(e)) from None

    def _enumerate(self) -> int:
        """Print every object of a class in canonical order"""
        obj = self.args.object
        n = self._single_n()
        if obj == "dyck":
            self._guard(n, self.config.max_n_paths, "Dyck paths")
            if self.args.k is None and self.args.p is None:
                paths = dyck.enumerate_dyck(n)
            else:
                k, p = self._split()
                paths = dyck.enumerate_D(k, p, n)
            self._emit([{"path": str(path)} for path in paths])
        elif obj == "syt":
            self._guard(n, self.config.max_n_paths, "tableaux")
            d = self._shape_d()
            _check_shape(d, n)
            found = tableaux.enumerate_syt(d, n)
            self._emit([{"tableau": str(tableau)} for tableau in found])
        elif obj == "pattern":
            self._guard(n, self.config.max_n_permutations, "permutations")
            members = patterns.enumerate_family(n, self._family())
            self._emit([{"permutation": str(perm)} for perm in members])
        else:
            self._guard(n, self.config.max_n_decks, "decks")
            records = [
                {"deck": str(deck), "max_score": cardgame.max_prefix_score(deck)}
                for deck in cardgame.enumerate_decks(n)
            ]
            self._emit(records, ["deck"])
        return EXIT_OK

    def _map(self) -> int:
        """Apply a bijection (or its inverse) to one object"""
        mappers = {
            "syt-dyck": self._map_syt_dyck,
            "zeta": self._map_zeta,
            "pad": self._map_pad,
            "theta": self._map_theta,
            "tau": self._map_tau,
            "walk-dyck": self._map_walk_dyck,
            "syt-class": self._map_syt_class,
        }
        mapper: Callable[[str], Record] = mappers[self.args.bijection]
        record = {"bijection": self.args.bijection, "inverse": self.args.inverse}
        record["input"] = self.args.input
        record.update(mapper(self.args.input))
        self._emit([record], ["output"])
        return EXIT_OK

    def _map_syt_dyck(self, text: str) -> Record:
        if self.args.inverse:
            return {"output": str(tableaux.syt_to_dyck(tableaux.TwoRowTableau.parse(text)))}
        return {"output": str(tableaux.dyck_to_syt(dyck.validate(text)))}

    def _map_zeta(self, text: str) -> Record:
        k, p = self._split()
        path = dyck.validate(text)
        if self.args.inverse:
            return {"output": str(tableaux.zeta_inverse(path, k, p))}
        return {"output": str(tableaux.zeta(path, k, p))}

    def _map_pad(self, text: str) -> Record:
        tableau = tableaux.TwoRowTableau.parse(text)
        if self.args.inverse:
            return {"output": str(tableaux.unpad(tableau, self._require("d")))}
        return {"output": str(tableaux.pad(tableau))}

    def _map_theta(self, text: str) -> Record:
        if self.args.inverse:
            text, b = _split_b(text, self.args.b)
            return {"output": str(patterns.theta_inverse(patterns.Permutation.parse(text), b))}
        image, b = patterns.theta(patterns.Permutation.parse(text))
        return {"output": f"{image},b={b}", "b": b}

    def _map_tau(self, text: str) -> Record:
        if self.args.inverse:
            text, b = _split_b(text, self.args.b)
            return {"output": str(patterns.tau_inverse(patterns.Permutation.parse(text), b))}
        image, b = patterns.tau(patterns.Permutation.parse(text))
        return {"output": f"{image},b={b}", "b": b}

    def _map_walk_dyck(self, text: str) -> Record:
        if self.args.inverse:
            path = dyck.validate(text)
            walk = cardgame.bounded_dyck_to_walk(path, self._require("r"))
            cards = "".join(
                cardgame.RED if step == 1 else cardgame.BLACK for step in walk.steps
            )
            return {"output": cards}
        deck = cardgame.Deck(text.strip().upper())
        r = self.args.r if self.args.r is not None else cardgame.max_prefix_score(deck)
        path = cardgame.walk_to_bounded_dyck(cardgame.deck_to_walk(deck), r)
        return {"output": str(path), "r": r}

    def _map_syt_class(self, text: str) -> Record:
        k, p = self._split()
        if self.args.inverse:
            path = dyck.validate(text)
            return {"output": str(tableaux.class_path_to_tableau(path, k, p))}
        tableau = tableaux.TwoRowTableau.parse(text)
        return {"output": str(tableaux.tableau_to_class_path(tableau, k, p))}

    def _suite_bound(self, suite: str) -> int:
        """The largest --max-n the configured guards allow for a suite."""
        bounds = {
            "counts": min(self.config.max_n_paths, self.config.max_n_permutations),
            "bijections": min(
                self.config.max_n_paths,
                self.config.max_n_permutations,
                self.config.max_n_decks,
            ),
            "game": self.config.max_n_decks,
        }
        if suite == "all":
            return min(bounds.values())
        return bounds[suite]

    def _verify(self) -> int:
        """Run verification suites and print one row per case"""
        suite = self.args.suite
        bound = self._suite_bound(suite)
        max_n = bound if self.args.max_n is None else self.args.max_n
        if max_n < 0:
            raise UsageError(f"--max-n must be nonnegative, got {max_n}")
        if max_n > bound:
            logger.warning("Refusing to verify %s with --max-n %d (bound %d)", suite, max_n, bound)
            raise GuardExceededError(
                f"--max-n {max_n} exceeds the bound of {bound} for suite {suite}"
            )

        reports = verification.run_suites(suite, max_n, self.config.report_until)
        records = [record for report in reports for record in report.records()]
        self._emit(records, ["suite", "case", "ranges", "checked", "status", "counterexample"])

        failed = [report for report in reports if not report.passed]
        if failed:
            logger.error("First counterexample: %s", failed[0].first_counterexample)
            return EXIT_VERIFICATION_FAILED
        return EXIT_OK

    def _game(self) -> int:
        """Print expected scores for one deck size, or the best threshold for a range"""
        if self.args.scan is not None:
            return self._game_scan(self.args.scan)
        if self.args.n is None:
            raise UsageError("game needs --n N or --scan N")
        n = self._single_n()
        if n < 1:
            raise UsageError("game needs --n N or --scan N with N >= 1")
        scores = cardgame.expected_scores(n)
        best, guess = cardgame.optimal_r(n), cardgame.conjecture_r(n)
        records = [
            {
                "n": n,
                "r": r,
                "expected": score,
                "approx": f"{float(score):.6f}",
                "optimal": r == best,
                "conjecture_r": guess,
                "agree": best == guess,
            }
            for r, score in scores.items()
        ]
        self._emit(records)
        return EXIT_OK

    def _game_scan(self, limit: int) -> int:
        if limit < 1:
            raise UsageError(f"--scan needs N >= 1, got {limit}")
        records = []
        disagreements = []
        for n in range(1, limit + 1):
            best, guess = cardgame.optimal_r(n), cardgame.conjecture_r(n)
            if best != guess:
                disagreements.append(n)
            scores = cardgame.expected_scores(n)
            records.append(
                {
                    "n": n,
                    "optimal": best,
                    "conjecture": guess,
                    "agree": best == guess,
                    "expected": " ".join(str(score) for score in scores.values()),
                }
            )
        if disagreements:
            logger.warning("optimal r differs from the conjecture at n=%s", disagreements)
        self._emit(records, ["n", "optimal", "conjecture", "agree"])
        return EXIT_OK

    def _draw(self) -> int:
        """Draw a path, tableau or deck as plain text"""
        obj, text = self.args.object, self.args.input
        if obj == "path":
            drawing = dyck.render_path(dyck.validate(text))
        elif obj == "tableau":
            drawing = tableaux.render_tableau(tableaux.TwoRowTableau.parse(text))
        else:
            deck = cardgame.Deck(text.strip().upper())
            drawing = dyck.render_path(cardgame.deck_to_walk(deck).as_text())
        self._emit([{"object": obj, "input": text, "drawing": drawing}], ["drawing"])
        return EXIT_OK
