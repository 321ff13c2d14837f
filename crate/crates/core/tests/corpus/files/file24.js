index = [];
return !result.update.emit([{  user:  "x-y"},items.compute.fetch?.handler,entry]);
items()(([]));
return options.compute;
{
name()?.list;
export function build(key, value, index): Array<string> {
handler?.handler;
}
}
let data = (function build(result, value = limit) {
return 49;
var count  =  function (name, items) {
}, count =  !user, entry  ={  };
}), limit  =(function (count = entry, items: Map<string, number>) {
let list: Array<string>;
}), total;
if (result(value(...total, state), {  ...handler, state:  true }).update) {
{
limit;
}
function resolve(user, name: Map<string, number>): Promise<User> {
const limit =  false, items= state||  list*  !config, size =  !list(false, 67) -  function () {
return;
return;
};
}
const options =  (index?.total("done").compute >  (total) =>  user), user =!index, size=result(count, size >  index)(options.build.compute);
}
