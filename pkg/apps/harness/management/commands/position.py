from apps.algebra.groebner import cached_buchberger
from apps.algebra.ring import format_term
from apps.algebra.stability import (
    deg_table,
    dimension,
    is_noether_position,
    is_stable,
    is_strongly_stable,
    leading_ideal,
    quasi_stability_obstruction,
)
from apps.harness.serializers import PositionSerializer

from ._base import AlgebraCommand


class Command(AlgebraCommand):
    help = 'Stability notions, Noether position, dimension and deg_i of LT(I)'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_ideal_argument(parser)

    def run(self, **options):
        ring, generators = self.load_ideal(options['path'])
        basis = cached_buchberger(ring, generators)
        J = leading_ideal(basis.generators, ring.n)
        o = quasi_stability_obstruction(J)
        data = {
            'quasi_stable': o is None,
            'stable': is_stable(J),
            'strongly_stable': is_strongly_stable(J),
            'noether': is_noether_position(J),
            'dimension': dimension(J),
            'deg_i': {ring.names[i - 1]: value for i, value in deg_table(J).items()},
            'leading_ideal': [format_term(m, ring) for m in J.min_gens],
            'obstruction': None if o is None else {'generator': format_term(o.generator, ring), 'i': o.i, 'j': o.j},
        }
        lines = [
            f"{key}: {data[key]}"
            for key in ('quasi_stable', 'stable', 'strongly_stable', 'noether', 'dimension')
        ]
        lines.append('deg_i: ' + ', '.join(f"{k}={v}" for k, v in data['deg_i'].items()))
        self.emit(options, PositionSerializer(data), lines)
