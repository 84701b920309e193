from hopswitch.services.reporting import build_report, describe_joint_state, write_distribution_csv, write_report
from hopswitch.services.resolvers import resolve_coin, resolve_extension_pair, resolve_state

__all__ = [
    "build_report",
    "describe_joint_state",
    "write_distribution_csv",
    "write_report",
    "resolve_coin",
    "resolve_extension_pair",
    "resolve_state",
]
