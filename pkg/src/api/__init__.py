# HTTP front end
