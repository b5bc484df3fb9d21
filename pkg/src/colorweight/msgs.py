"""
User-facing messages of the colorweight command line.

This module contains:
- CLI_MSGS: everything printed for a person reading the terminal
- HELP_MSGS: argparse help strings

Machine-readable output (polynomials, JSON reports) is never routed through these tables.
"""

# ============================================================================
# CLI MESSAGES - Printed to stdout/stderr
# ============================================================================

CLI_MSGS = {
    "input_error": "error: {error}",
    "inconsistent": "inconsistent result: {error}",
    "disagreement": "methods disagree on {diagram}: recurrence {recurrence}, oracle {oracle}",
    "agreement": "recurrence and oracle agree",
    "method_line": "{method}: {value}",
    "table_row": "{code}\t{weight}",
    "mirror_mismatch": "mirror pair {first} / {second} has different weights {w1} / {w2}",
    "stu_term": "{coeff}\t{diagram}",
    "check_line": "[{status}] {name}: {instances} instances",
    "check_failure": "    first failure: {failure}",
    "check_note": "    note: {note}",
    "suite_summary": "suite {suite}: {verdict}",
}

# ============================================================================
# HELP MESSAGES - argparse descriptions
# ============================================================================

HELP_MSGS = {
    "prog": "Universal weight systems of the color Lie algebra A1_e on chord and Jacobi diagrams",
    "weight": "weight of a chord diagram",
    "jacobi": "weight of a Jacobi diagram read from JSON",
    "table": "weights of all diagrams of one order",
    "verify": "run a verification suite",
    "diagram": "chord diagram as a label sequence, e.g. '1 2 1 2'",
    "file": "file holding the diagram (label sequence or Jacobi JSON)",
    "epsilon": "render symbolically or specialise e to +1 / -1",
    "method": "evaluate with the recurrence, the enveloping-algebra oracle, or both",
    "cut": "circle position the oracle reads from",
    "deframed": "report the deframed weight (c = 0)",
    "format": "output format",
    "max_order": "largest diagram order a suite sweeps",
    "order": "diagram order for the table",
    "indecomposable": "list only diagrams that are not connected sums",
    "rotations_only": "group by rotation only instead of rotation and reflection",
    "suite": "suite to run",
    "dump_stu": "also print the signed chord diagrams of the STU resolution",
    "verbose": "-v for info logs, -vv for debug logs (on stderr)",
}
