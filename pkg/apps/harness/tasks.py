import logging

from celery import shared_task

from apps.algebra.exceptions import CappedResultError

from .corpus import CorpusMember
from .schemas import INCOMPLETE, VerificationReport
from .serializers import VerificationReportSerializer

logger = logging.getLogger(__name__)


@shared_task
def verify_member_task(payload, seed=0):
    """
    Verify one corpus member.
    The payload is CorpusMember.to_payload() because Celery arguments travel as JSON.
    """
    from .verify import VerificationEngine

    member = CorpusMember.from_payload(payload)
    try:
        report = VerificationEngine(seed).verify(member.ring, member.generators, member.ideal_id)
    except CappedResultError as e:
        logger.error(f"Task for {member.ideal_id} hit a cap: {e}")
        report = VerificationReport(member.ideal_id, INCOMPLETE, member.ring.n, seed, reasons=[str(e)])
    report.metadata.update(
        {
            "index": member.index,
            "target": member.target.value,
            "retries": member.retries,
            "change": payload["change"],
            "original": payload["original"],
        }
    )
    return dict(VerificationReportSerializer(report).data)
