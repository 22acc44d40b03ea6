from apps.algebra.fset import f_set, lemma_mora_check
from apps.algebra.groebner import cached_buchberger
from apps.algebra.ring import RingContext, format_term
from apps.harness.serializers import FSetSerializer

from ._base import AlgebraCommand


def _sorted_names(terms, ring: RingContext):
    return [format_term(t, ring) for t in sorted(terms, key=lambda t: (t.degree, tuple(reversed(t))))]


class Command(AlgebraCommand):
    help = 'F(I), the older F~(I) and both versions of the recursion inequalities'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_ideal_argument(parser)

    def run(self, **options):
        ring, generators = self.load_ideal(options['path'])
        basis = cached_buchberger(ring, generators)
        report = f_set(basis)
        lemma = None
        if ring.n >= 2:
            m = lemma_mora_check(basis, max(f.degree for f in generators))
            lemma = {
                'a': [m.a_lhs, m.a_rhs, m.holds_a],
                'b': [m.b_lhs, m.b_rhs, m.holds_b],
                'tilde_a': [m.a_lhs, m.mora_a_rhs, m.mora_holds_a],
                'tilde_b': [m.mora_b_lhs, m.mora_b_rhs, m.mora_holds_b],
            }
        data = {
            'F': _sorted_names(report.F, ring),
            'F_size': report.F_size,
            'tildeF': _sorted_names(report.tildeF, ring),
            'tildeF_size': report.tildeF_size,
            'levels': [
                {
                    'n': level.n,
                    'dimension': level.dimension,
                    'degree': level.degree,
                    'F_size': len(level.F),
                    'tildeF_size': len(level.tilde_F),
                }
                for level in report.levels
            ],
            'lemma': lemma,
        }
        lines = [f"#F = {report.F_size}, #F~ = {report.tildeF_size}"]
        if lemma:
            for key, (lhs, rhs, holds) in lemma.items():
                lines.append(f"  ({key}) {lhs} <= {rhs}: {'holds' if holds else 'fails'}")
        self.emit(options, FSetSerializer(data), lines)
