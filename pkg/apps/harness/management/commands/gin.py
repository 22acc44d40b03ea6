from django.conf import settings

from apps.algebra.invariants import gin
from apps.algebra.ring import format_term
from apps.algebra.stability import is_strongly_stable
from apps.harness.serializers import GinSerializer

from ._base import AlgebraCommand


class Command(AlgebraCommand):
    help = 'Generic initial ideal from agreeing random changes of coordinates'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_ideal_argument(parser)
        self.add_seed_argument(parser)
        parser.add_argument('--trials', type=int, default=None, help='Agreeing trials required (at least 2)')

    def run(self, **options):
        ring, generators = self.load_ideal(options['path'])
        trials = settings.STABLEGB_GIN_TRIALS if options['trials'] is None else options['trials']
        G = gin(generators, options['seed'], trials)
        data = {
            'ring': list(ring.names),
            'gin': [format_term(m, ring) for m in G.min_gens],
            'seed': options['seed'],
            'trials': trials,
            'strongly_stable': is_strongly_stable(G),
        }
        self.emit(options, GinSerializer(data), ['gin(I) = <' + ', '.join(data['gin']) + '>'])
