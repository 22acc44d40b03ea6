from django.core.management.base import CommandError

from apps.algebra.transform import Position
from apps.harness.schemas import FAIL, PASS, CorpusSpec
from apps.harness.serializers import CorpusReportSerializer, VerificationReportSerializer, dump
from apps.harness.verify import VerificationEngine, exercised_dimensions

from ._base import EXIT_CHECK_FAILED, EXIT_USAGE, AlgebraCommand


class Command(AlgebraCommand):
    help = 'Check every applicable degree, regularity and F-set statement on an ideal or a random corpus'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('path', nargs='?', default=None)
        parser.add_argument('--affine', action='store_true', help='Generators need not be homogeneous')
        parser.add_argument('--corpus', action='store_true')
        parser.add_argument('--count', type=int, default=200)
        parser.add_argument('--seed', type=int, default=0, help='Corpus seed')
        parser.add_argument('--gin-seed', type=int, default=0, help='Seed of the changes made during verification')
        parser.add_argument('--n-max', type=int, default=4)
        parser.add_argument('--d-max', type=int, default=4)
        parser.add_argument('--k-max', type=int, default=4)
        parser.add_argument('--target', choices=[p.value for p in Position], default=None)

    def run(self, **options):
        engine = VerificationEngine(options['gin_seed'])
        if options['corpus']:
            self.run_corpus(engine, options)
            return
        if options['path'] is None:
            raise CommandError('verify needs an ideal file or --corpus', returncode=EXIT_USAGE)
        ring, generators = self.load_ideal(options['path'])
        if options['affine']:
            report = engine.verify_affine(ring, generators)
        else:
            report = engine.verify(ring, generators, options['path'])
        lines = [f"{report.ideal_id}: {report.status}"]
        for c in report.checks:
            if c.applicable:
                mark = 'ok  ' if c.holds else ('FAIL' if c.gating else 'note')
                lines.append(f"  {mark} {c.theorem}: {c.lhs} vs {c.rhs}")
            else:
                lines.append(f"  n/a  {c.theorem}: {c.reason}")
        self.emit(options, VerificationReportSerializer(report), lines)
        self.finish([report.status])

    def run_corpus(self, engine, options):
        spec = CorpusSpec(
            n_max=options['n_max'],
            d_max=options['d_max'],
            k_max=options['k_max'],
            count=options['count'],
            seed=options['seed'],
            target=Position(options['target']) if options['target'] else None,
        )
        reports = engine.verify_corpus(spec)
        statuses = [r.status for r in reports]
        data = {
            'seed': spec.seed,
            'count': len(reports),
            'passed': statuses.count(PASS),
            'failed': statuses.count(FAIL),
            'incomplete': len(statuses) - statuses.count(PASS) - statuses.count(FAIL),
            'exercised_dimensions': exercised_dimensions(reports),
            'reports': reports,
        }
        if options['json']:
            self.stdout.write(dump(CorpusReportSerializer(data)))
        else:
            self.stdout.write(
                f"{data['count']} ideals: {data['passed']} passed, {data['failed']} failed, "
                f"{data['incomplete']} incomplete"
            )
            for r in reports:
                if r.status != PASS:
                    self.stdout.write(f"  {r.ideal_id} {r.status}: {'; '.join(r.reasons)}")
        self.finish(statuses)

    def finish(self, statuses):
        if FAIL in statuses:
            raise CommandError('applicable checks failed', returncode=EXIT_CHECK_FAILED)
