# Identity registry and grid verifier
