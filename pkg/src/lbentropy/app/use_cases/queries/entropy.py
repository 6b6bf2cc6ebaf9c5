from typing import override

from lbentropy.app import dto
from lbentropy.app.bus.interfaces.handler import Handler, handler
from lbentropy.app.contracts.context import Context


class TrueEntropyQuery(dto.BaseDTO):
    model: dto.ModelSpec
    trim: float = 0.0


@handler
class TrueEntropyQueryHandler(Handler[Context, TrueEntropyQuery, dto.TrueEntropyReport]):
    @override
    def __call__(self, ctx: Context, qc: TrueEntropyQuery, /) -> dto.TrueEntropyReport:
        model = qc.model.build()
        return dto.TrueEntropyReport(
            model=model.family,
            params=list(model.params),
            entropy=model.true_entropy(qc.trim),
            trim=qc.trim,
            mean=model.mean(),
        )
