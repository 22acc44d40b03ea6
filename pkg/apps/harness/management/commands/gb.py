from django.core.management.base import CommandError

from apps.algebra.groebner import buchberger, cached_buchberger, truncated_gb
from apps.algebra.ring import format_polynomial, format_term
from apps.harness.serializers import GroebnerBasisSerializer

from ._base import EXIT_USAGE, AlgebraCommand


class Command(AlgebraCommand):
    help = 'Reduced degrevlex Groebner basis of a homogeneous ideal'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_ideal_argument(parser)
        parser.add_argument('--truncate', type=int, default=None, help='Truncated basis G_t with its certificate')
        parser.add_argument('--early-stop', action='store_true', help='Stop once LT is strongly stable and a degree adds nothing')
        parser.add_argument('--degree-cap', type=int, default=None, help='Abort (exit 3) above this degree')

    def run(self, **options):
        ring, generators = self.load_ideal(options['path'])
        if options['truncate'] is not None:
            self.run_truncated(ring, generators, options)
            return
        basis, trace = buchberger(
            generators, early_stop_if_stable=options['early_stop'], degree_cap=options['degree_cap']
        )
        if not options['early_stop'] and options['degree_cap'] is None:
            # fills the basis cache for later verify runs
            basis = cached_buchberger(ring, generators)
        data = {
            'ring': list(ring.names),
            'generators': [format_polynomial(g, ring) for g in basis.generators],
            'lt_ideal': [format_term(t, ring) for t in basis.leading_terms],
            'max_degree': basis.max_degree,
            'early_stop_degree': trace.early_stop_degree,
            'trace': {
                str(s): {'pairs': log.pairs, 'skipped': log.skipped, 'inputs': log.inputs, 'new': log.new}
                for s, log in sorted(trace.degrees.items())
            },
            'truncate': None,
            'certified': None,
        }
        lines = [f"deg(I) = {data['max_degree']}"]
        if trace.early_stop_degree is not None:
            lines.append(f"early stop at degree {trace.early_stop_degree}")
        lines += [f"  {text}" for text in data['generators']]
        self.emit(options, GroebnerBasisSerializer(data), lines)

    def run_truncated(self, ring, generators, options):
        if options['early_stop'] or options['degree_cap'] is not None:
            raise CommandError('--truncate takes neither --early-stop nor --degree-cap', returncode=EXIT_USAGE)
        G = truncated_gb(generators, options['truncate'])
        data = {
            'ring': list(ring.names),
            'generators': [format_polynomial(g, ring) for g in G.generators],
            'lt_ideal': [format_term(g.leading_term, ring) for g in G.generators],
            'max_degree': max((g.degree for g in G.generators), default=0),
            'early_stop_degree': None,
            'trace': {},
            'truncate': G.degree,
            'certified': G.certified,
        }
        verdict = 'certified' if G.certified else 'not certified'
        lines = [f"G_{G.degree}: {len(G.generators)} elements, {verdict}"]
        lines += [f"  {text}" for text in data['generators']]
        self.emit(options, GroebnerBasisSerializer(data), lines)
