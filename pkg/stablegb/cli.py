"""Single command-line entry point for the stablegb subcommands."""
import os
import sys

SUBCOMMANDS = (
    'gb', 'pommaret', 'position', 'invariants', 'gin',
    'fset', 'bounds', 'transform', 'verify', 'fixtures',
)

USAGE = (
    "usage: stablegb <subcommand> [options]\n"
    "subcommands: " + ", ".join(SUBCOMMANDS) + "\n"
    "run 'stablegb <subcommand> --help' for the options of a subcommand"
)


def main(argv=None) -> int:
    """Dispatch argv to the matching management command and return its exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'stablegb.settings')

    if not argv or argv[0] in ('-h', '--help'):
        print(USAGE, file=sys.stderr if not argv else sys.stdout)
        return 2 if not argv else 0
    if argv[0] not in SUBCOMMANDS:
        print(f"unknown subcommand: {argv[0]}\n{USAGE}", file=sys.stderr)
        return 2

    from django.core.management import execute_from_command_line
    try:
        execute_from_command_line(['stablegb', *argv])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0
