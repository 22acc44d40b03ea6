from django.core.management.base import CommandError

from apps.harness.fixtures import run_fixtures
from apps.harness.serializers import FixtureOutcomeSerializer, dump

from ._base import EXIT_CHECK_FAILED, AlgebraCommand


class Command(AlgebraCommand):
    help = 'Run the worked examples and compare against their known answers'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_seed_argument(parser)

    def run(self, **options):
        outcomes = run_fixtures(options['seed'])
        if options['json']:
            self.stdout.write(dump(FixtureOutcomeSerializer(outcomes, many=True)))
        else:
            for outcome in outcomes:
                self.stdout.write(f"{outcome.name}: {outcome.status}")
                for e in outcome.expectations:
                    if not e.ok:
                        self.stdout.write(f"  {e.label}: expected {e.expected}, got {e.actual}")
        if any(o.status != 'PASS' for o in outcomes):
            raise CommandError('fixture expectations not met', returncode=EXIT_CHECK_FAILED)
