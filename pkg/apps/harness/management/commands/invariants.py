from apps.algebra.groebner import cached_buchberger
from apps.algebra.invariants import hilbert_series, is_regular_sequence, pommaret_in_position
from apps.algebra.pommaret import PommaretBasis, depth_from_pommaret, pommaret_completion, reg_from_pommaret
from apps.algebra.stability import leading_ideal
from apps.harness.serializers import InvariantsSerializer

from ._base import AlgebraCommand


class Command(AlgebraCommand):
    help = 'Hilbert series, Hilbert polynomial, hilb, reg and depth'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_ideal_argument(parser)
        self.add_seed_argument(parser)
        parser.add_argument('--hf-to', type=int, default=None, help='Last degree of the Hilbert function table')

    def run(self, **options):
        ring, generators = self.load_ideal(options['path'])
        basis = cached_buchberger(ring, generators)
        data = hilbert_series(leading_ideal(basis.generators, ring.n), options['hf_to'])
        H = pommaret_completion(basis)
        if not isinstance(H, PommaretBasis):
            H = pommaret_in_position(generators, options['seed'])
        result = {
            'hs_numerator': list(data.numerator_coefficients),
            'dimension': data.D,
            'hp_coefficients': list(data.hp_coefficients),
            'hilb': data.hilb,
            'hf_table': {str(s): data.hf_table[s] for s in sorted(data.hf_table)},
            'reg': reg_from_pommaret(H),
            'depth': depth_from_pommaret(H),
            'regular_sequence': is_regular_sequence(generators) if len(generators) <= ring.n else None,
        }
        lines = [
            f"HS numerator: {result['hs_numerator']} over (1-t)^{data.D}",
            f"HP coefficients: {result['hp_coefficients']}",
            f"hilb = {data.hilb}, reg = {result['reg']}, depth = {result['depth']}",
            f"HF: {[data.hf_table[s] for s in sorted(data.hf_table)]}",
        ]
        self.emit(options, InvariantsSerializer(result), lines)
