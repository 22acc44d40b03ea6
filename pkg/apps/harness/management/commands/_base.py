"""Shared plumbing of the stablegb subcommands: input loading, output and exit codes."""
import logging
from typing import Iterable, List, Tuple

from django.core.management.base import BaseCommand, CommandError

from apps.algebra.exceptions import (
    CappedResultError,
    DomainError,
    InconclusiveError,
    TransformationError,
    UsageError,
)
from apps.algebra.ring import Polynomial, RingContext, parse_ideal
from apps.harness.serializers import dump

logger = logging.getLogger(__name__)

EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPPED = 3


class AlgebraCommand(BaseCommand):
    """Subcommands implement `run`; algebra errors become exit codes here."""

    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--json', action='store_true', help='Print the JSON schema instead of a table')

    def add_ideal_argument(self, parser):
        parser.add_argument('path', help='Ideal file: a "ring:" line, then one generator per line')

    def add_seed_argument(self, parser):
        parser.add_argument('--seed', type=int, default=0, help='Seed of every random choice')

    def load_ideal(self, path: str) -> Tuple[RingContext, List[Polynomial]]:
        try:
            with open(path, encoding='utf-8') as handle:
                text = handle.read()
        except OSError as e:
            raise CommandError(f"cannot read {path}: {e}", returncode=EXIT_USAGE)
        ring, generators = parse_ideal(text)
        if not generators:
            raise CommandError(f"{path} has no generators", returncode=EXIT_USAGE)
        return ring, generators

    def emit(self, options, serializer, lines: Iterable[str]):
        if options['json']:
            self.stdout.write(dump(serializer))
        else:
            for line in lines:
                self.stdout.write(line)

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except (UsageError, DomainError) as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)
        except CappedResultError as e:
            logger.error(f"Resource cap {e.cap} reached: {e}")
            raise CommandError(str(e), returncode=EXIT_CAPPED)
        except (InconclusiveError, TransformationError) as e:
            raise CommandError(str(e), returncode=EXIT_CHECK_FAILED)

    def run(self, **options):
        raise NotImplementedError
