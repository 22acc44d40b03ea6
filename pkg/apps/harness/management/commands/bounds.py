from apps.algebra import bounds
from apps.harness.serializers import BoundsSerializer

from ._base import AlgebraCommand


def _degrees(text):
    return [int(x) for x in text.split(',') if x.strip()]


class Command(AlgebraCommand):
    help = 'Evaluate the degree and regularity bounds exactly, ascending'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, required=True, help='Number of variables')
        parser.add_argument('--d', type=int, required=True, help='Maximal generator degree')
        parser.add_argument('--dim', type=int, default=0, help='Krull dimension D')
        parser.add_argument('--depth', type=int, default=0)
        parser.add_argument('--degrees', type=_degrees, default=None, help='Comma separated generator degrees')
        parser.add_argument('--formula', choices=[f.value for f in bounds.Formula], default=None)
        parser.add_argument('--remarks', action='store_true', help='Also evaluate the printed pairwise comparisons')

    def run(self, **options):
        n, d, D, lam = options['n'], options['d'], options['dim'], options['depth']
        if options['formula']:
            values = [bounds.bound(options['formula'], n, d, D, lam, options['degrees'])]
        else:
            values = bounds.compare_bounds(n, d, D, lam, options['degrees'])
        data = {'n': n, 'd': d, 'D': D, 'depth': lam, 'bounds': values}
        lines = [f"{b.formula_id.value:16} {b.text}" for b in values]
        if options['remarks']:
            data['remarks'] = bounds.remark_comparisons()
            for r in data['remarks']:
                flag = '  (printed ' + r.printed + ')' if r.discrepancy else ''
                lines.append(
                    f"{r.left.formula_id.value}{tuple(r.left.inputs.values())[:3]} = {r.left.text} "
                    f"{r.computed} {r.right.formula_id.value} = {r.right.text}{flag}"
                )
        self.emit(options, BoundsSerializer(data), lines)
