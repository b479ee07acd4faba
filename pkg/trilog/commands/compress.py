import argparse
from typing import Any

from trilog.commands.base import (
    ELL_OPTION,
    PARAMS_OPTION,
    SEED_OPTION,
    W_OPTION,
    BaseCommand,
    CommandMeta,
    CommandOption,
    parse_int_list,
    subgroup_from_args,
)
from trilog.compress import (
    PairingTuple,
    compress_four_dlogs,
    compress_from_pairings,
    synth_pairing_tuple,
    transmitted_tuple,
)
from trilog.errors import UsageError
from trilog.field import CyclotomicElement
from trilog.metrics.counter import counting

_TUPLE_NAMES = ("r0", "r1", "r2", "r3", "r4")


class CompressCommand(BaseCommand):
    meta = CommandMeta(
        id="compress",
        label="Compress",
        description="Transmitted tuple from the pairing values r0..r4 with three logarithms.",
        options=[
            PARAMS_OPTION,
            ELL_OPTION,
            W_OPTION,
            SEED_OPTION,
            CommandOption(flag="--synthetic", help="matrix c0,d0,c1,d1; pairing values are synthesized"),
            *(CommandOption(flag=f"--{name}", help=f"pairing value {name}, hex 're,im'") for name in _TUPLE_NAMES),
            CommandOption(flag="--four-dlogs", kind="flag", help="use the four-logarithm baseline"),
        ],
    )

    def run(self, args: argparse.Namespace) -> dict[str, Any]:
        params = subgroup_from_args(args)
        given = {name: getattr(args, name) for name in _TUPLE_NAMES}
        matrix = None
        if args.synthetic:
            if any(given.values()):
                raise UsageError("--synthetic cannot be combined with --r0..--r4")
            values = parse_int_list(args.synthetic, "--synthetic")
            if len(values) != 4:
                raise UsageError(f"--synthetic expects four integers, got {len(values)}")
            matrix = tuple(values)
            tup = synth_pairing_tuple(params, matrix, args.seed)
        else:
            missing = [name for name, value in given.items() if not value]
            if missing:
                raise UsageError(f"missing pairing values: {', '.join(missing)} (or use --synthetic)")
            tup = PairingTuple(**{name: CyclotomicElement.from_hex(params.p, v) for name, v in given.items()})

        with counting() as counter:
            if args.four_dlogs:
                key = compress_four_dlogs(tup, params)
            else:
                key = compress_from_pairings(tup, params)
        result = {
            **params.describe(),
            **key.model_dump(),
            "base_label": None if args.four_dlogs else 1 - key.flag,
            "method": "four_dlogs" if args.four_dlogs else "three_dlogs",
            "op_counts": counter.snapshot().model_dump(),
        }
        if matrix is not None:
            result["matrix"] = list(matrix)
            result["expected"] = transmitted_tuple(matrix, params).model_dump()
            result["tuple"] = tup.as_hex()
        return result
