import argparse
import json
import logging
import sys
from collections.abc import Sequence

from colorweight.diagram import (
    ChordDiagram,
    canonical_form,
    dihedral_form,
    enumerate_diagrams,
    is_indecomposable,
    parse_chord,
    reflect,
    signed,
)
from colorweight.envelope import UniversalEnvelope
from colorweight.errors import NonIntegralResultError, NotCentralError, NotInSpanError
from colorweight.jacobi import JacobiDiagram, stu_resolve
from colorweight.msgs import CLI_MSGS, HELP_MSGS
from colorweight.poly import CenterPoly
from colorweight.relations import lift
from colorweight.schemas import RunConfig, VerificationReport
from colorweight.suites import CachedOracle, run_suite
from colorweight.weights import WeightSystem

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2

# Raised when computed values contradict each other, not when the input is bad.
INCONSISTENCY_ERRORS = (NotInSpanError, NotCentralError, NonIntegralResultError)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="colorweight", description=HELP_MSGS["prog"])
    parser.add_argument("-v", "--verbose", action="count", default=0, help=HELP_MSGS["verbose"])
    commands = parser.add_subparsers(dest="command", required=True)

    def evaluation_flags(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("-d", "--diagram", help=HELP_MSGS["diagram"])
        sub.add_argument("-f", "--file", help=HELP_MSGS["file"])
        sub.add_argument("--epsilon", choices=["sym", "+1", "-1"], default="sym", help=HELP_MSGS["epsilon"])
        sub.add_argument(
            "--method", choices=["recurrence", "oracle", "both"], default="recurrence", help=HELP_MSGS["method"]
        )
        sub.add_argument("--cut", type=int, default=0, help=HELP_MSGS["cut"])
        sub.add_argument("--deframed", action="store_true", help=HELP_MSGS["deframed"])
        sub.add_argument("--format", choices=["text", "json"], default="text", help=HELP_MSGS["format"])

    weight = commands.add_parser("weight", help=HELP_MSGS["weight"])
    evaluation_flags(weight)

    jacobi = commands.add_parser("jacobi", help=HELP_MSGS["jacobi"])
    evaluation_flags(jacobi)
    jacobi.add_argument("--dump-stu", action="store_true", help=HELP_MSGS["dump_stu"])

    table = commands.add_parser("table", help=HELP_MSGS["table"])
    table.add_argument("order", type=int, help=HELP_MSGS["order"])
    table.add_argument("--indecomposable", action="store_true", help=HELP_MSGS["indecomposable"])
    table.add_argument("--rotations-only", action="store_true", help=HELP_MSGS["rotations_only"])
    table.add_argument("--epsilon", choices=["sym", "+1", "-1"], default="sym", help=HELP_MSGS["epsilon"])
    table.add_argument("--deframed", action="store_true", help=HELP_MSGS["deframed"])
    table.add_argument("--format", choices=["text", "json"], default="text", help=HELP_MSGS["format"])

    verify = commands.add_parser("verify", help=HELP_MSGS["verify"])
    verify.add_argument(
        "suite",
        choices=["axioms", "4t", "stu", "cut", "deframe", "props", "oracle", "tenrel", "reflect"],
        help=HELP_MSGS["suite"],
    )
    verify.add_argument("--max-order", type=int, default=4, help=HELP_MSGS["max_order"])
    verify.add_argument("--format", choices=["text", "json"], default="text", help=HELP_MSGS["format"])
    return parser


def configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def to_config(args: argparse.Namespace) -> RunConfig:
    """Collect the parsed arguments into a validated ``RunConfig``."""
    fields = {key: value for key, value in vars(args).items() if value is not None}
    return RunConfig.model_validate(fields)


# ============================================================================
# Commands
# ============================================================================


class Cli:
    """Runs one command; every ``cmd_*`` method prints its result and returns the exit code."""

    def __init__(self, cfg: RunConfig, out=None, err=None):
        self.cfg = cfg
        self.out = out or sys.stdout
        self.err = err or sys.stderr
        self.system = WeightSystem()
        self._envelope: UniversalEnvelope | None = None

    @property
    def envelope(self) -> UniversalEnvelope:
        if self._envelope is None:
            self._envelope = UniversalEnvelope()
        return self._envelope

    def say(self, text: str) -> None:
        print(text, file=self.out)

    def warn(self, text: str) -> None:
        print(text, file=self.err)

    def source(self) -> str:
        if self.cfg.file is not None:
            return self.cfg.file.read_text()
        return self.cfg.diagram or ""

    def finish(self, value: CenterPoly) -> CenterPoly:
        if self.cfg.deframed:
            value = value.substitute_c_zero()
        if self.cfg.eps_value is not None:
            value = value.evaluate(self.cfg.eps_value)
        return value

    def render(self, value: CenterPoly) -> str:
        return json.dumps(value.to_json()) if self.cfg.format == "json" else value.render()

    def evaluate(self, recurrence, oracle, label: str) -> int:
        """Print one or both evaluations; disagreement is exit 1."""
        if self.cfg.method == "recurrence":
            self.say(self.render(self.finish(recurrence())))
            return EXIT_OK
        if self.cfg.method == "oracle":
            self.say(self.render(self.finish(oracle())))
            return EXIT_OK
        by_recurrence, by_oracle = self.finish(recurrence()), self.finish(oracle())
        agree = by_recurrence == by_oracle
        if self.cfg.format == "json":
            payload = {
                "recurrence": by_recurrence.to_json(),
                "oracle": by_oracle.to_json(),
                "agree": agree,
            }
            self.say(json.dumps(payload))
        else:
            self.say(CLI_MSGS["method_line"].format(method="recurrence", value=by_recurrence.render()))
            self.say(CLI_MSGS["method_line"].format(method="oracle", value=by_oracle.render()))
        if not agree:
            self.warn(
                CLI_MSGS["disagreement"].format(
                    diagram=label, recurrence=by_recurrence.render(), oracle=by_oracle.render()
                )
            )
            return EXIT_FAILURE
        logger.info(CLI_MSGS["agreement"])
        return EXIT_OK

    def cmd_weight(self) -> int:
        d = parse_chord(self.source())
        return self.evaluate(
            lambda: self.system.weight_recurrence(d),
            lambda: self.envelope.oracle_center_weight(d, self.cfg.cut),
            str(d),
        )

    def cmd_jacobi(self) -> int:
        j = JacobiDiagram.from_json(self.source())
        if self.cfg.dump_stu:
            for d, coeff in stu_resolve(j).items():
                self.warn(CLI_MSGS["stu_term"].format(coeff=signed(coeff), diagram=d))
        if self.cfg.cut:
            oracle = lift(lambda d: self.envelope.oracle_center_weight(d, self.cfg.cut))
        else:
            oracle = lift(CachedOracle(self.envelope))
        return self.evaluate(
            lambda: self.system.weight_jacobi(j),
            lambda: oracle(j),
            f"{j.legs}-leg Jacobi diagram",
        )

    def cmd_table(self) -> int:
        diagrams = enumerate_diagrams(self.cfg.order)
        if self.cfg.indecomposable:
            diagrams = [d for d in diagrams if is_indecomposable(d)]
        rows: dict[ChordDiagram, CenterPoly] = {}
        for d in diagrams:
            key = d if self.cfg.rotations_only else dihedral_form(d)
            if key in rows:
                continue
            rows[key] = self.system.weight(key)
            mirror = canonical_form(reflect(key))
            if not self.cfg.rotations_only and mirror != key:
                mirror_weight = self.system.weight(mirror)
                if mirror_weight != rows[key]:
                    self.warn(
                        CLI_MSGS["mirror_mismatch"].format(
                            first=key, second=mirror, w1=rows[key].render(), w2=mirror_weight.render()
                        )
                    )
        ordered = sorted(rows.items(), key=lambda item: item[0].labels())
        if self.cfg.format == "json":
            payload = [
                {"diagram": d.code(), "weight": self.finish(value).to_json()} for d, value in ordered
            ]
            self.say(json.dumps(payload))
        else:
            for d, value in ordered:
                self.say(CLI_MSGS["table_row"].format(code=d.code(), weight=self.finish(value).render()))
        return EXIT_OK

    def cmd_verify(self) -> int:
        report = run_suite(self.cfg.suite, max_order=self.cfg.max_order)
        if self.cfg.format == "json":
            self.say(report.model_dump_json())
        else:
            self.print_report(report)
        return EXIT_OK if report.passed else EXIT_FAILURE

    def print_report(self, report: VerificationReport) -> None:
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL" if check.assertive else "NOTE"
            self.say(
                CLI_MSGS["check_line"].format(status=status, name=check.name, instances=check.instances)
            )
            if check.failure:
                self.say(CLI_MSGS["check_failure"].format(failure=check.failure))
            if not check.assertive:
                for note in check.notes:
                    self.say(CLI_MSGS["check_note"].format(note=note))
        verdict = "passed" if report.passed else "failed"
        self.say(CLI_MSGS["suite_summary"].format(suite=report.suite, verdict=verdict))

    def run(self) -> int:
        return getattr(self, f"cmd_{self.cfg.command}")()


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point for the colorweight CLI command."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        cfg = to_config(args)
        return Cli(cfg).run()
    except INCONSISTENCY_ERRORS as exc:
        logger.debug("inconsistent result", exc_info=True)
        print(CLI_MSGS["inconsistent"].format(error=exc), file=sys.stderr)
        return EXIT_FAILURE
    except (ValueError, KeyError, OSError) as exc:
        logger.debug("input rejected", exc_info=True)
        print(CLI_MSGS["input_error"].format(error=exc), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
