from django.core.management.base import CommandError

from apps.algebra.groebner import cached_buchberger
from apps.algebra.pommaret import NotQuasiStable, depth_from_pommaret, pommaret_completion, reg_from_pommaret
from apps.algebra.ring import format_polynomial, format_term
from apps.harness.serializers import PommaretSerializer

from ._base import EXIT_CAPPED, AlgebraCommand


class Command(AlgebraCommand):
    help = 'Pommaret basis of a homogeneous ideal, or the quasi-stability obstruction'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_ideal_argument(parser)
        parser.add_argument('--degree-cap', type=int, default=None)

    def run(self, **options):
        ring, generators = self.load_ideal(options['path'])
        H = pommaret_completion(cached_buchberger(ring, generators), options['degree_cap'])
        if isinstance(H, NotQuasiStable):
            if H.cap_reached:
                raise CommandError(f"completion reached the degree cap {H.cap}", returncode=EXIT_CAPPED)
            o = H.obstruction
            data = {
                'ring': list(ring.names),
                'quasi_stable': False,
                'elements': [],
                'reg': None,
                'depth': None,
                'obstruction': {'generator': format_term(o.generator, ring), 'i': o.i, 'j': o.j},
            }
            lines = [f"not quasi stable: {data['obstruction']['generator']} (x{o.i}, x{o.j})"]
            self.emit(options, PommaretSerializer(data), lines)
            return
        elements = [
            {
                'polynomial': format_polynomial(e.polynomial, ring),
                'leading_term': format_term(e.leading_term, ring),
                'cls': e.cls,
                'multiplicative': [ring.names[k - 1] for k in e.multiplicative],
            }
            for e in H.elements
        ]
        data = {
            'ring': list(ring.names),
            'quasi_stable': True,
            'elements': elements,
            'reg': reg_from_pommaret(H),
            'depth': depth_from_pommaret(H),
            'obstruction': None,
        }
        lines = [f"reg = {data['reg']}, depth = {data['depth']}"]
        lines += [f"  [{e['cls']}] {e['polynomial']}" for e in elements]
        self.emit(options, PommaretSerializer(data), lines)
