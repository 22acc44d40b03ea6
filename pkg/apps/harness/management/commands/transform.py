from apps.algebra.ring import format_polynomial, format_term
from apps.algebra.transform import Position, transform_to_position
from apps.harness.serializers import TransformSerializer

from ._base import AlgebraCommand


class Command(AlgebraCommand):
    help = 'Move an ideal into quasi stable or strongly stable position by a linear change'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_ideal_argument(parser)
        self.add_seed_argument(parser)
        parser.add_argument('--target', choices=[p.value for p in Position], default=Position.QUASI_STABLE.value)
        parser.add_argument('--no-identity', action='store_true', help='Always draw a random change')

    def run(self, **options):
        ring, generators = self.load_ideal(options['path'])
        result = transform_to_position(
            generators, Position(options['target']), options['seed'], allow_identity=not options['no_identity']
        )
        data = {
            'target': options['target'],
            'seed': options['seed'],
            'retries': result.retries,
            'change': [[str(a) for a in row] for row in result.change.matrix],
            'generators': [format_polynomial(f, ring) for f in result.generators],
            'leading_ideal': [format_term(m, ring) for m in result.leading_ideal.min_gens],
        }
        lines = ['change:'] + ['  ' + ' '.join(row) for row in data['change']]
        lines += ['generators:'] + [f"  {text}" for text in data['generators']]
        self.emit(options, TransformSerializer(data), lines)
