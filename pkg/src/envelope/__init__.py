"""
Logarithmic images, log-convex hulls and envelopes of holomorphy.
"""

from src.envelope.certificate import stein_certificate
from src.envelope.hull import log_convex_hull, log_image
from src.envelope.models import HalfPlane, LogBox, LogHull, LogRegion, SteinCertificate

__all__ = [
    "HalfPlane",
    "LogBox",
    "LogHull",
    "LogRegion",
    "SteinCertificate",
    "log_convex_hull",
    "log_image",
    "stein_certificate",
]
