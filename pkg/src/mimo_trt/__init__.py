"""Throughput-reliability tradeoff simulator and predictor for outage-limited MIMO channels."""
