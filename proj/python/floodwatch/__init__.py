# Copyright 2026-present The Floodwatch Authors
# SPDX-License-Identifier: Apache-2.0
"""Software dataplane engine and HELLO-flood attack simulator.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its public surface.
"""

from ._core import (  # noqa: F401
    BROADCAST_ADDR,
    MIN_FRAME_BYTES,
    PCAP_LINKTYPE,
    ZEP_PROTO_ID_ALT,
    ZEP_PROTO_ID_EX,
    Alert,
    AttackMode,
    AttackSpec,
    FloodwatchError,
    InstalledRule,
    NodeRole,
    NodeSpec,
    PacketRecord,
    ProfileConfig,
    RunReport,
    ScenarioConfig,
    SplitMix64,
    Switch,
    generate,
    load_scenario_file,
    load_scenario_json,
    make_hello_frame,
    parse_frame,
    read_pcap,
    run_records,
    run_scenario,
    write_pcap,
)

__version__ = "0.1.0"
