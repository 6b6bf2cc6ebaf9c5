from typing import override

from lbentropy.app import dto
from lbentropy.app.bus.interfaces.handler import Handler, handler
from lbentropy.app.contracts import exceptions as exc
from lbentropy.app.contracts.context import Context
from lbentropy.core.sample import MIN_SIZE
from lbentropy.core.sampling import LBSampler
from lbentropy.core.streams import sample_stream


class SampleQuery(dto.BaseDTO):
    model: dto.ModelSpec
    n: int
    seed: int

    def __post_init__(self) -> None:
        if self.n < MIN_SIZE:
            raise exc.ValidationError(f"n must be at least {MIN_SIZE}", n=self.n)
        if self.seed < 0:
            raise exc.ValidationError("seed must be nonnegative", seed=self.seed)


@handler
class SampleQueryHandler(Handler[Context, SampleQuery, dto.SampleDraw]):
    @override
    def __call__(self, ctx: Context, qc: SampleQuery, /) -> dto.SampleDraw:
        sampler = LBSampler.from_model(qc.model.build())
        draws = sampler.draw(qc.n, sample_stream(qc.seed))
        return dto.SampleDraw(
            model=qc.model,
            n=qc.n,
            seed=qc.seed,
            mu=sampler.mu,
            values=[float(v) for v in draws],
        )
