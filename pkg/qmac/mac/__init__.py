from ._channel import Channel, Mode, CU, node_name, transmit_duration
from ._token import CirculatingToken, InstructionToken, ct_grant, id_grant
from ._arbiter import CtArbiter, Request

__all__ = ['Channel', 'Mode', 'CU', 'node_name', 'transmit_duration',
           'CirculatingToken', 'InstructionToken', 'ct_grant', 'id_grant',
           'CtArbiter', 'Request']
